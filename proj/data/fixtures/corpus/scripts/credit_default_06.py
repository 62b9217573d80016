# credit default notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/credit_default.csv')
print(df.isnull().sum().sort_values(ascending=False))
sns.boxplot(x=df['default'], y=df['num_products'])
plt.show()
print(df['balance'].value_counts())
print(df['credit_limit'].describe())
print(df.columns.tolist())
print(df.groupby('default')['transaction_amount'].agg(['mean', 'count']).head(10))
print(df['tenure_months'].describe())
print(df.groupby('default')['iban_country'].agg(['mean', 'count']).head(10))
print(df.head())
print(df.groupby('default')['currency'].agg(['mean', 'count']).head(10))
print('currency unique:', df['currency'].nunique(), 'missing:', df['currency'].isnull().sum())
sns.countplot(x='default', data=df)
plt.show()
sns.boxplot(x=df['default'], y=df['balance'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
print('interest_rate unique:', df['interest_rate'].nunique(), 'missing:', df['interest_rate'].isnull().sum())
print('tenure_months unique:', df['tenure_months'].nunique(), 'missing:', df['tenure_months'].isnull().sum())
sns.boxplot(x=df['default'], y=df['currency'])
plt.show()
print('num_products unique:', df['num_products'].nunique(), 'missing:', df['num_products'].isnull().sum())
print(df['payment_status'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
df = df.drop_duplicates()
df['num_products'] = df['num_products'].fillna(df['num_products'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=3)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with credit_default')
