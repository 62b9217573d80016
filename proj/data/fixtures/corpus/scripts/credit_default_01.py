# credit default notebook 1
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
df = pd.read_csv('../input/credit_default.csv')
sns.countplot(x='default', data=df)
plt.show()
sns.boxplot(x=df['default'], y=df['transaction_amount'])
plt.show()
sns.boxplot(x=df['default'], y=df['num_products'])
plt.show()
print(df.groupby('default')['interest_rate'].agg(['mean', 'count']).head(10))
print(df.groupby('default')['balance'].agg(['mean', 'count']).head(10))
print(df.groupby('default')['credit_limit'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
print(df.dtypes)
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
print(df['account_type'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['credit_limit'].dropna(), kde=True)
plt.title('credit_limit distribution')
plt.show()
print(df.groupby('default')['payment_status'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['default'], y=df['iban_country'])
plt.show()
print(df['interest_rate'].value_counts())
print('balance unique:', df['balance'].nunique(), 'missing:', df['balance'].isnull().sum())
sns.boxplot(x=df['default'], y=df['payment_status'])
plt.show()
df = df.drop_duplicates()
df['currency'] = df['currency'].fillna(df['currency'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=80)
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
