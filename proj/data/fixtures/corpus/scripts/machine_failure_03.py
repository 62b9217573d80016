# machine failure notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import ExtraTreesClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/machine_failure.csv')
print(df['temperature_c'].describe())
sns.countplot(x='failure', data=df)
plt.show()
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print(df.shape)
print(df['device_id'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['vibration_rms'].dropna(), kde=True)
plt.title('vibration_rms distribution')
plt.show()
print(df['temperature_c'].value_counts())
print(df['humidity_pct'].describe())
sns.boxplot(x=df['failure'], y=df['pressure_hpa'])
plt.show()
print(df['voltage'].value_counts())
print(df.groupby('failure')['pressure_hpa'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['vibration_rms'])
plt.show()
print('vibration_rms unique:', df['vibration_rms'].nunique(), 'missing:', df['vibration_rms'].isnull().sum())
print(df['vibration_rms'].value_counts())
print(df['status'].value_counts())
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
print(df['pressure_hpa'].value_counts())
print(df.groupby('failure')['device_id'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['device_id'])
plt.show()
sns.boxplot(x=df['failure'], y=df['humidity_pct'])
plt.show()
sns.boxplot(x=df['failure'], y=df['timestamp'])
plt.show()
df = df.drop_duplicates()
df['vibration_rms'] = df['vibration_rms'].fillna(df['vibration_rms'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['failure']
X = df.drop(['failure'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=92)
print(X_train.shape, X_test.shape)
model = ExtraTreesClassifier(n_estimators=150)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with machine_failure')
