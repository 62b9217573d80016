# machine failure notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/machine_failure.csv')
print(df.groupby('failure')['humidity_pct'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
sns.boxplot(x=df['failure'], y=df['timestamp'])
plt.show()
print(df['timestamp'].value_counts())
print(df['temperature_c'].value_counts())
print(df.head())
print(df['humidity_pct'].describe())
sns.countplot(x='failure', data=df)
plt.show()
sns.boxplot(x=df['failure'], y=df['status'])
plt.show()
print(df.groupby('failure')['pressure_hpa'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['pressure_hpa'])
plt.show()
print(df.groupby('failure')['status'].agg(['mean', 'count']).head(10))
print(df.info())
print(df['vibration_rms'].describe())
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['device_id'].describe())
print(df.duplicated().sum())
print(df.groupby('failure')['vibration_rms'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['voltage'].dropna(), kde=True)
plt.title('voltage distribution')
plt.show()
sns.boxplot(x=df['failure'], y=df['vibration_rms'])
plt.show()
print('device_id unique:', df['device_id'].nunique(), 'missing:', df['device_id'].isnull().sum())
print(df['pressure_hpa'].value_counts())
df = df.drop_duplicates()
df['status'] = df['status'].fillna(df['status'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['failure']
X = df.drop(['failure'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=37)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with machine_failure')
