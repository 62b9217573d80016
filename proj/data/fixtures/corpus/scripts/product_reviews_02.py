# product reviews notebook 2
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
print(df['review_text'].describe())
print(df.dtypes)
print(df['reviewer'].describe())
print('title unique:', df['title'].nunique(), 'missing:', df['title'].isnull().sum())
print(df['title'].value_counts())
print(df.info())
print(df.groupby('sentiment')['product_category'].agg(['mean', 'count']).head(10))
print(df['verified'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['verified'].dropna(), kde=True)
plt.title('verified distribution')
plt.show()
print(df['rating'].describe())
print(df['helpful_votes'].value_counts())
print(df.isnull().sum().sort_values(ascending=False))
plt.figure(figsize=(8, 4))
sns.histplot(df['review_text'].dropna(), kde=True)
plt.title('review_text distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['helpful_votes'].dropna(), kde=True)
plt.title('helpful_votes distribution')
plt.show()
sns.boxplot(x=df['sentiment'], y=df['helpful_votes'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['title'].dropna(), kde=True)
plt.title('title distribution')
plt.show()
df = df.drop_duplicates()
df['title'] = df['title'].fillna(df['title'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['sentiment']
X = df.drop(['sentiment'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=25)
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
