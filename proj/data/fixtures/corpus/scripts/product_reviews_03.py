# product reviews notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.feature_extraction.text import TfidfVectorizer
from sklearn.linear_model import LogisticRegression
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/product_reviews.csv')
print(df['rating'].value_counts())
print('product_category unique:', df['product_category'].nunique(), 'missing:', df['product_category'].isnull().sum())
sns.boxplot(x=df['sentiment'], y=df['product_category'])
plt.show()
print(df['reviewer'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['title'].dropna(), kde=True)
plt.title('title distribution')
plt.show()
print(df.groupby('sentiment')['title'].agg(['mean', 'count']).head(10))
print(df['title'].describe())
sns.boxplot(x=df['sentiment'], y=df['helpful_votes'])
plt.show()
sns.boxplot(x=df['sentiment'], y=df['verified'])
plt.show()
sns.boxplot(x=df['sentiment'], y=df['review_text'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['rating'].dropna(), kde=True)
plt.title('rating distribution')
plt.show()
print(df.groupby('sentiment')['reviewer'].agg(['mean', 'count']).head(10))
print('reviewer unique:', df['reviewer'].nunique(), 'missing:', df['reviewer'].isnull().sum())
print(df['verified'].value_counts())
print(df.head())
print(df.dtypes)
plt.figure(figsize=(8, 4))
sns.histplot(df['verified'].dropna(), kde=True)
plt.title('verified distribution')
plt.show()
print(df['helpful_votes'].value_counts())
print(df['verified'].describe())
df = df.drop_duplicates()
df['reviewer'] = df['reviewer'].fillna(df['reviewer'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['sentiment']
X = df.drop(['sentiment'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=0)
print(X_train.shape, X_test.shape)
tfidfv0 = TfidfVectorizer(max_features=5000)
X_train = tfidfv0.fit_transform(X_train)
X_test = tfidfv0.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with product_reviews')
