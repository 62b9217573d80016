# credit default notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
path = '../input/credit_default/' + 'data.csv'
df = pd.read_csv(path)
print(df['interest_rate'].describe())
print(df['transaction_amount'].describe())
sns.countplot(x='default', data=df)
plt.show()
print('interest_rate unique:', df['interest_rate'].nunique(), 'missing:', df['interest_rate'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
print('account_type unique:', df['account_type'].nunique(), 'missing:', df['account_type'].isnull().sum())
print('credit_limit unique:', df['credit_limit'].nunique(), 'missing:', df['credit_limit'].isnull().sum())
print(df.groupby('default')['num_products'].agg(['mean', 'count']).head(10))
print(df['iban_country'].value_counts())
print(df['account_type'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
print(df['currency'].value_counts())
print(df.groupby('default')['iban_country'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
print(df.describe().T)
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
df = df.drop_duplicates()
df['transaction_amount'] = df['transaction_amount'].fillna(df['transaction_amount'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=64)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with credit_default')
