# product reviews notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.decomposition import TruncatedSVD
from sklearn.feature_extraction.text import TfidfVectorizer
from sklearn.svm import LinearSVC
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/product_reviews.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['product_category'].dropna(), kde=True)
plt.title('product_category distribution')
plt.show()
print(df.duplicated().sum())
print(df['rating'].describe())
sns.boxplot(x=df['sentiment'], y=df['reviewer'])
plt.show()
print(df.describe().T)
print(df.columns.tolist())
print('helpful_votes unique:', df['helpful_votes'].nunique(), 'missing:', df['helpful_votes'].isnull().sum())
sns.boxplot(x=df['sentiment'], y=df['helpful_votes'])
plt.show()
sns.boxplot(x=df['sentiment'], y=df['rating'])
plt.show()
print(df['reviewer'].describe())
sns.boxplot(x=df['sentiment'], y=df['product_category'])
plt.show()
print(df.shape)
print(df.groupby('sentiment')['title'].agg(['mean', 'count']).head(10))
print(df['helpful_votes'].describe())
print(df.info())
sns.boxplot(x=df['sentiment'], y=df['review_text'])
plt.show()
print(df['verified'].describe())
print(df['rating'].value_counts())
print(df.dtypes)
plt.figure(figsize=(8, 4))
sns.histplot(df['helpful_votes'].dropna(), kde=True)
plt.title('helpful_votes distribution')
plt.show()
df = df.drop_duplicates()
df['reviewer'] = df['reviewer'].fillna(df['reviewer'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['sentiment']
X = df.drop(['sentiment'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=77)
print(X_train.shape, X_test.shape)
tfidfv0 = TfidfVectorizer(max_features=5000)
X_train = tfidfv0.fit_transform(X_train)
X_test = tfidfv0.transform(X_test)
trunca1 = TruncatedSVD(n_components=50)
X_train = trunca1.fit_transform(X_train)
X_test = trunca1.transform(X_test)
model = LinearSVC(C=1.0)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with product_reviews')
