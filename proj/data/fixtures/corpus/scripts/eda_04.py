# exploring product_reviews
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/product_reviews.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['review_text'].dropna(), kde=True)
plt.title('review_text distribution')
plt.show()
print('rating unique:', df['rating'].nunique(), 'missing:', df['rating'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['helpful_votes'].dropna(), kde=True)
plt.title('helpful_votes distribution')
plt.show()
print(df.info())
print('product_category unique:', df['product_category'].nunique(), 'missing:', df['product_category'].isnull().sum())
print(df['helpful_votes'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['verified'].dropna(), kde=True)
plt.title('verified distribution')
plt.show()
print('reviewer unique:', df['reviewer'].nunique(), 'missing:', df['reviewer'].isnull().sum())
print('verified unique:', df['verified'].nunique(), 'missing:', df['verified'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['title'].dropna(), kde=True)
plt.title('title distribution')
plt.show()
sns.boxplot(x=df['sentiment'], y=df['review_text'])
plt.show()
print(df['verified'].value_counts())
sns.boxplot(x=df['sentiment'], y=df['rating'])
plt.show()
print(df['title'].describe())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['product_category'].dropna(), kde=True)
plt.title('product_category distribution')
plt.show()
print(df['product_category'].describe())
sns.boxplot(x=df['sentiment'], y=df['title'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['rating'].dropna(), kde=True)
plt.title('rating distribution')
plt.show()
print(df['reviewer'].describe())
print(df['title'].value_counts())
print(df['verified'].describe())
sns.boxplot(x=df['sentiment'], y=df['verified'])
plt.show()
print(df.groupby('sentiment')['review_text'].agg(['mean', 'count']).head(10))
print(df.groupby('sentiment')['verified'].agg(['mean', 'count']).head(10))
print(df.head())
print(df.groupby('sentiment')['rating'].agg(['mean', 'count']).head(10))
print(df.duplicated().sum())
print(df.groupby('sentiment')['reviewer'].agg(['mean', 'count']).head(10))
print(df.columns.tolist())
print(df['review_text'].value_counts())
print('title unique:', df['title'].nunique(), 'missing:', df['title'].isnull().sum())
print(df.shape)
print(df.describe().T)
sns.countplot(x='sentiment', data=df)
plt.show()
