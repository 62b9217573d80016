# exploring house_prices
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/house_prices.csv')
print(df['garage_cars'].describe())
sns.boxplot(x=df['price'], y=df['roof_style'])
plt.show()
print(df['lot_area'].describe())
print(df.dtypes)
print(df.duplicated().sum())
sns.boxplot(x=df['price'], y=df['heating'])
plt.show()
print(df.groupby('price')['roof_style'].agg(['mean', 'count']).head(10))
print(df['bedrooms'].describe())
print(df.isnull().sum().sort_values(ascending=False))
print(df.info())
print(df['city'].describe())
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
sns.boxplot(x=df['price'], y=df['garage_cars'])
plt.show()
print('bathrooms unique:', df['bathrooms'].nunique(), 'missing:', df['bathrooms'].isnull().sum())
print(df.columns.tolist())
sns.boxplot(x=df['price'], y=df['year_built'])
plt.show()
print(df['sqft'].describe())
print(df['bathrooms'].value_counts())
print(df.groupby('price')['sqft'].agg(['mean', 'count']).head(10))
print(df.head())
print(df['heating'].describe())
print(df['lot_area'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['garage_cars'].dropna(), kde=True)
plt.title('garage_cars distribution')
plt.show()
print(df.groupby('price')['year_built'].agg(['mean', 'count']).head(10))
print(df['sqft'].value_counts())
print(df.groupby('price')['garage_cars'].agg(['mean', 'count']).head(10))
print(df.groupby('price')['city'].agg(['mean', 'count']).head(10))
print('city unique:', df['city'].nunique(), 'missing:', df['city'].isnull().sum())
print(df['roof_style'].value_counts())
print(df.groupby('price')['bedrooms'].agg(['mean', 'count']).head(10))
print(df['year_built'].describe())
print('lot_area unique:', df['lot_area'].nunique(), 'missing:', df['lot_area'].isnull().sum())
print('roof_style unique:', df['roof_style'].nunique(), 'missing:', df['roof_style'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['roof_style'].dropna(), kde=True)
plt.title('roof_style distribution')
plt.show()
print(df.describe().T)
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['neighborhood'].dropna(), kde=True)
plt.title('neighborhood distribution')
plt.show()
print(df.shape)
sns.boxplot(x=df['price'], y=df['sqft'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
