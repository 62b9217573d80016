# machine failure notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.decomposition import PCA
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
path = '../input/machine_failure/' + 'data.csv'
df = pd.read_csv(path)
print(df.groupby('failure')['timestamp'].agg(['mean', 'count']).head(10))
print(df['pressure_hpa'].value_counts())
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print(df.groupby('failure')['device_id'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['device_id'].dropna(), kde=True)
plt.title('device_id distribution')
plt.show()
sns.countplot(x='failure', data=df)
plt.show()
print(df['temperature_c'].value_counts())
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print('device_id unique:', df['device_id'].nunique(), 'missing:', df['device_id'].isnull().sum())
sns.boxplot(x=df['failure'], y=df['temperature_c'])
plt.show()
print(df['device_id'].value_counts())
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
print(df['timestamp'].describe())
print(df['pressure_hpa'].describe())
print(df.groupby('failure')['vibration_rms'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['voltage'])
plt.show()
print(df['vibration_rms'].value_counts())
print(df['status'].value_counts())
print(df.dtypes)
print(df.head())
print(df['voltage'].value_counts())
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
print(df['device_id'].describe())
df = df.drop_duplicates()
df['device_id'] = df['device_id'].fillna(df['device_id'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['failure']
X = df.drop(['failure'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=70)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
standa_b0 = StandardScaler()
X_train_b = standa_b0.fit_transform(X_train)
X_test_b = standa_b0.transform(X_test)
pca_b1 = PCA(n_components=5)
X_train_b = pca_b1.fit_transform(X_train_b)
X_test_b = pca_b1.transform(X_test_b)
model_b = LogisticRegression(max_iter=1000, C=0.5)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with machine_failure')
