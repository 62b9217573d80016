# exploring stroke
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/stroke.csv')
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
print(df.shape)
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print(df['glucose'].describe())
print(df.groupby('stroke')['glucose'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['blood_type'].dropna(), kde=True)
plt.title('blood_type distribution')
plt.show()
sns.boxplot(x=df['stroke'], y=df['age'])
plt.show()
sns.boxplot(x=df['stroke'], y=df['blood_type'])
plt.show()
print(df['smoker'].value_counts())
print('bmi unique:', df['bmi'].nunique(), 'missing:', df['bmi'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
print(df['max_heart_rate'].value_counts())
print(df.groupby('stroke')['smoker'].agg(['mean', 'count']).head(10))
print(df['chest_pain'].value_counts())
print(df['glucose'].value_counts())
print(df['sex'].value_counts())
print(df.groupby('stroke')['bmi'].agg(['mean', 'count']).head(10))
print(df.groupby('stroke')['age'].agg(['mean', 'count']).head(10))
print(df['resting_bp'].value_counts())
print(df.dtypes)
plt.figure(figsize=(8, 4))
sns.histplot(df['smoker'].dropna(), kde=True)
plt.title('smoker distribution')
plt.show()
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
print(df['bmi'].describe())
print(df['age'].value_counts())
print(df['cholesterol'].describe())
sns.boxplot(x=df['stroke'], y=df['max_heart_rate'])
plt.show()
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print(df.groupby('stroke')['chest_pain'].agg(['mean', 'count']).head(10))
print(df.groupby('stroke')['cholesterol'].agg(['mean', 'count']).head(10))
print(df['chest_pain'].describe())
sns.boxplot(x=df['stroke'], y=df['smoker'])
plt.show()
sns.countplot(x='stroke', data=df)
plt.show()
print(df.isnull().sum().sort_values(ascending=False))
plt.figure(figsize=(8, 4))
sns.histplot(df['resting_bp'].dropna(), kde=True)
plt.title('resting_bp distribution')
plt.show()
print(df.columns.tolist())
print(df['age'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['smoker'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
