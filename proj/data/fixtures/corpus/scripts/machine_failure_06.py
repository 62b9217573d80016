# machine failure notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.decomposition import PCA
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/machine_failure.csv')
print('status unique:', df['status'].nunique(), 'missing:', df['status'].isnull().sum())
sns.boxplot(x=df['failure'], y=df['vibration_rms'])
plt.show()
print(df.dtypes)
sns.countplot(x='failure', data=df)
plt.show()
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
print(df.shape)
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print(df.groupby('failure')['humidity_pct'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['humidity_pct'].dropna(), kde=True)
plt.title('humidity_pct distribution')
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['temperature_c'].value_counts())
sns.boxplot(x=df['failure'], y=df['timestamp'])
plt.show()
print(df['voltage'].value_counts())
print(df['timestamp'].value_counts())
print(df.duplicated().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['voltage'].dropna(), kde=True)
plt.title('voltage distribution')
plt.show()
print(df['voltage'].describe())
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print(df.isnull().sum().sort_values(ascending=False))
print(df['pressure_hpa'].value_counts())
sns.boxplot(x=df['failure'], y=df['humidity_pct'])
plt.show()
print(df.groupby('failure')['device_id'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['temperature_c'])
plt.show()
df = df.drop_duplicates()
df['device_id'] = df['device_id'].fillna(df['device_id'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['failure']
X = df.drop(['failure'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=92)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
pca1 = PCA(n_components=5)
X_train = pca1.fit_transform(X_train)
X_test = pca1.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with machine_failure')
