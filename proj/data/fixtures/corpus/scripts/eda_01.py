# exploring heart
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/heart.csv')
sns.boxplot(x=df['disease'], y=df['cholesterol'])
plt.show()
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
print(df['max_heart_rate'].value_counts())
print(df.head())
print(df.groupby('disease')['sex'].agg(['mean', 'count']).head(10))
print(df['sex'].value_counts())
print(df.describe().T)
print(df.isnull().sum().sort_values(ascending=False))
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
print(df.groupby('disease')['glucose'].agg(['mean', 'count']).head(10))
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['resting_bp'].describe())
sns.boxplot(x=df['disease'], y=df['age'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
sns.boxplot(x=df['disease'], y=df['resting_bp'])
plt.show()
print(df.groupby('disease')['cholesterol'].agg(['mean', 'count']).head(10))
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
sns.boxplot(x=df['disease'], y=df['sex'])
plt.show()
sns.countplot(x='disease', data=df)
plt.show()
print(df['chest_pain'].describe())
print(df.groupby('disease')['smoker'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['smoker'].dropna(), kde=True)
plt.title('smoker distribution')
plt.show()
sns.boxplot(x=df['disease'], y=df['max_heart_rate'])
plt.show()
print(df['resting_bp'].value_counts())
print(df.duplicated().sum())
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
print(df['cholesterol'].describe())
sns.boxplot(x=df['disease'], y=df['glucose'])
plt.show()
print(df['glucose'].describe())
print(df['chest_pain'].value_counts())
print(df.groupby('disease')['bmi'].agg(['mean', 'count']).head(10))
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
print(df.groupby('disease')['resting_bp'].agg(['mean', 'count']).head(10))
print(df.columns.tolist())
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
print(df['bmi'].describe())
print(df['age'].value_counts())
