# machine failure notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/machine_failure.csv')
sns.boxplot(x=df['failure'], y=df['status'])
plt.show()
print(df['temperature_c'].value_counts())
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['humidity_pct'].dropna(), kde=True)
plt.title('humidity_pct distribution')
plt.show()
print(df['humidity_pct'].value_counts())
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print(df.duplicated().sum())
sns.boxplot(x=df['failure'], y=df['vibration_rms'])
plt.show()
sns.boxplot(x=df['failure'], y=df['voltage'])
plt.show()
print(df['timestamp'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['vibration_rms'].dropna(), kde=True)
plt.title('vibration_rms distribution')
plt.show()
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print('timestamp unique:', df['timestamp'].nunique(), 'missing:', df['timestamp'].isnull().sum())
print(df['status'].describe())
sns.boxplot(x=df['failure'], y=df['device_id'])
plt.show()
print(df.head())
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
print(df.groupby('failure')['status'].agg(['mean', 'count']).head(10))
print(df['vibration_rms'].value_counts())
print(df['pressure_hpa'].describe())
print(df['vibration_rms'].describe())
print(df['voltage'].describe())
print(df['temperature_c'].describe())
print(df.groupby('failure')['vibration_rms'].agg(['mean', 'count']).head(10))
sns.countplot(x='failure', data=df)
plt.show()
df = df.drop_duplicates()
df['vibration_rms'] = df['vibration_rms'].fillna(df['vibration_rms'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['failure']
X = df.drop(['failure'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=32)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with machine_failure')
