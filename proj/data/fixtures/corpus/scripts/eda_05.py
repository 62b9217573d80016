# exploring machine_failure
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/machine_failure.csv')
print(df['vibration_rms'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['vibration_rms'].dropna(), kde=True)
plt.title('vibration_rms distribution')
plt.show()
print(df['status'].describe())
sns.boxplot(x=df['failure'], y=df['timestamp'])
plt.show()
sns.boxplot(x=df['failure'], y=df['vibration_rms'])
plt.show()
print(df.groupby('failure')['timestamp'].agg(['mean', 'count']).head(10))
print('timestamp unique:', df['timestamp'].nunique(), 'missing:', df['timestamp'].isnull().sum())
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['timestamp'].dropna(), kde=True)
plt.title('timestamp distribution')
plt.show()
print(df.groupby('failure')['humidity_pct'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['device_id'])
plt.show()
print(df['pressure_hpa'].describe())
print(df.dtypes)
print(df.groupby('failure')['status'].agg(['mean', 'count']).head(10))
print('status unique:', df['status'].nunique(), 'missing:', df['status'].isnull().sum())
print(df['timestamp'].describe())
print(df['vibration_rms'].describe())
print(df['voltage'].describe())
print(df['humidity_pct'].describe())
print(df.duplicated().sum())
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
print(df['temperature_c'].value_counts())
print(df.groupby('failure')['temperature_c'].agg(['mean', 'count']).head(10))
print(df.head())
print(df.columns.tolist())
print(df['pressure_hpa'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['pressure_hpa'].dropna(), kde=True)
plt.title('pressure_hpa distribution')
plt.show()
sns.boxplot(x=df['failure'], y=df['voltage'])
plt.show()
sns.boxplot(x=df['failure'], y=df['status'])
plt.show()
print(df['status'].value_counts())
print(df.groupby('failure')['voltage'].agg(['mean', 'count']).head(10))
print(df['timestamp'].value_counts())
print(df['temperature_c'].describe())
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
sns.boxplot(x=df['failure'], y=df['pressure_hpa'])
plt.show()
print(df.groupby('failure')['device_id'].agg(['mean', 'count']).head(10))
print(df['device_id'].value_counts())
print(df.info())
print(df['humidity_pct'].value_counts())
sns.boxplot(x=df['failure'], y=df['temperature_c'])
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
