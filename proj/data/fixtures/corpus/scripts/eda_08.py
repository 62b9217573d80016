# exploring energy_load
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/energy_load.csv')
print(df.info())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print('timestamp unique:', df['timestamp'].nunique(), 'missing:', df['timestamp'].isnull().sum())
print(df.isnull().sum().sort_values(ascending=False))
plt.figure(figsize=(8, 4))
sns.histplot(df['timestamp'].dropna(), kde=True)
plt.title('timestamp distribution')
plt.show()
sns.boxplot(x=df['load_kw'], y=df['temperature_c'])
plt.show()
print(df.describe().T)
print('vibration_rms unique:', df['vibration_rms'].nunique(), 'missing:', df['vibration_rms'].isnull().sum())
print(df['timestamp'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['status'].dropna(), kde=True)
plt.title('status distribution')
plt.show()
print(df['temperature_c'].describe())
sns.boxplot(x=df['load_kw'], y=df['timestamp'])
plt.show()
sns.boxplot(x=df['load_kw'], y=df['pressure_hpa'])
plt.show()
print(df.groupby('load_kw')['device_id'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['voltage'].dropna(), kde=True)
plt.title('voltage distribution')
plt.show()
print(df['voltage'].describe())
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print(df.dtypes)
print(df.groupby('load_kw')['pressure_hpa'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['load_kw'], y=df['vibration_rms'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['pressure_hpa'].dropna(), kde=True)
plt.title('pressure_hpa distribution')
plt.show()
print(df['pressure_hpa'].value_counts())
print(df['temperature_c'].value_counts())
sns.boxplot(x=df['load_kw'], y=df['device_id'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['vibration_rms'].dropna(), kde=True)
plt.title('vibration_rms distribution')
plt.show()
print(df.groupby('load_kw')['status'].agg(['mean', 'count']).head(10))
print(df['humidity_pct'].value_counts())
print(df['device_id'].value_counts())
print(df['vibration_rms'].describe())
print(df['vibration_rms'].value_counts())
print(df.shape)
print(df.groupby('load_kw')['humidity_pct'].agg(['mean', 'count']).head(10))
print(df['timestamp'].value_counts())
print(df.columns.tolist())
print(df.groupby('load_kw')['vibration_rms'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['load_kw'], y=df['voltage'])
plt.show()
