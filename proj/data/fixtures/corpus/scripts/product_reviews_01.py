# product reviews notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.feature_extraction.text import TfidfVectorizer
from sklearn.linear_model import LogisticRegression
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/product_reviews.csv')
print(df['reviewer'].value_counts())
sns.countplot(x='sentiment', data=df)
plt.show()
print(df.groupby('sentiment')['product_category'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['verified'].dropna(), kde=True)
plt.title('verified distribution')
plt.show()
print(df['rating'].value_counts())
print(df.groupby('sentiment')['verified'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['helpful_votes'].dropna(), kde=True)
plt.title('helpful_votes distribution')
plt.show()
print(df.groupby('sentiment')['reviewer'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['reviewer'].dropna(), kde=True)
plt.title('reviewer distribution')
plt.show()
print('title unique:', df['title'].nunique(), 'missing:', df['title'].isnull().sum())
print(df['helpful_votes'].value_counts())
print(df['verified'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['title'].dropna(), kde=True)
plt.title('title distribution')
plt.show()
sns.boxplot(x=df['sentiment'], y=df['helpful_votes'])
plt.show()
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['product_category'].dropna(), kde=True)
plt.title('product_category distribution')
plt.show()
print(df.groupby('sentiment')['helpful_votes'].agg(['mean', 'count']).head(10))
print(df.columns.tolist())
df = df.drop_duplicates()
df['product_category'] = df['product_category'].fillna(df['product_category'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['sentiment']
X = df.drop(['sentiment'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=83)
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
