# credit default notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/credit_default.csv')
print(df['iban_country'].value_counts())
print(df.groupby('default')['num_products'].agg(['mean', 'count']).head(10))
print('credit_limit unique:', df['credit_limit'].nunique(), 'missing:', df['credit_limit'].isnull().sum())
print(df.groupby('default')['currency'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['default'], y=df['tenure_months'])
plt.show()
print(df.isnull().sum().sort_values(ascending=False))
print('tenure_months unique:', df['tenure_months'].nunique(), 'missing:', df['tenure_months'].isnull().sum())
print('account_type unique:', df['account_type'].nunique(), 'missing:', df['account_type'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['account_type'].dropna(), kde=True)
plt.title('account_type distribution')
plt.show()
print(df.duplicated().sum())
print(df.info())
sns.boxplot(x=df['default'], y=df['interest_rate'])
plt.show()
print(df['payment_status'].value_counts())
print(df['num_products'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
sns.boxplot(x=df['default'], y=df['credit_limit'])
plt.show()
print(df.groupby('default')['transaction_amount'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['transaction_amount'].dropna(), kde=True)
plt.title('transaction_amount distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
df = df.drop_duplicates()
df['transaction_amount'] = df['transaction_amount'].fillna(df['transaction_amount'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=9)
print(X_train.shape, X_test.shape)
model = LGBMClassifier(num_leaves=31, n_estimators=200)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
model_b = LGBMClassifier(num_leaves=31, n_estimators=200)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with credit_default')
