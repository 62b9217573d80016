# product reviews notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.decomposition import TruncatedSVD
from sklearn.feature_extraction.text import TfidfVectorizer
from sklearn.linear_model import LogisticRegression
from sklearn.svm import LinearSVC
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/product_reviews/' + 'data.csv'
df = pd.read_csv(path)
sns.boxplot(x=df['sentiment'], y=df['verified'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['title'].dropna(), kde=True)
plt.title('title distribution')
plt.show()
print(df.head())
print(df.shape)
print(df.describe().T)
print(df['rating'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['reviewer'].dropna(), kde=True)
plt.title('reviewer distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['helpful_votes'].dropna(), kde=True)
plt.title('helpful_votes distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['verified'].dropna(), kde=True)
plt.title('verified distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['rating'].dropna(), kde=True)
plt.title('rating distribution')
plt.show()
print(df.duplicated().sum())
print('product_category unique:', df['product_category'].nunique(), 'missing:', df['product_category'].isnull().sum())
print(df['reviewer'].value_counts())
print(df.dtypes)
print('rating unique:', df['rating'].nunique(), 'missing:', df['rating'].isnull().sum())
print('verified unique:', df['verified'].nunique(), 'missing:', df['verified'].isnull().sum())
sns.boxplot(x=df['sentiment'], y=df['reviewer'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['review_text'].dropna(), kde=True)
plt.title('review_text distribution')
plt.show()
df = df.drop_duplicates()
df['review_text'] = df['review_text'].fillna(df['review_text'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['sentiment']
X = df.drop(['sentiment'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=53)
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
tfidfv_b0 = TfidfVectorizer(max_features=5000)
X_train_b = tfidfv_b0.fit_transform(X_train)
X_test_b = tfidfv_b0.transform(X_test)
trunca_b1 = TruncatedSVD(n_components=50)
X_train_b = trunca_b1.fit_transform(X_train_b)
X_test_b = trunca_b1.transform(X_test_b)
model_b = LinearSVC(C=1.0)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with product_reviews')
