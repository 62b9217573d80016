# loan approval notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.preprocessing import OneHotEncoder
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
path = '../input/loan_approval/' + 'data.csv'
df = pd.read_csv(path)
print(df.columns.tolist())
print(df['account_type'].describe())
print('account_type unique:', df['account_type'].nunique(), 'missing:', df['account_type'].isnull().sum())
print(df.shape)
print(df['tenure_months'].value_counts())
print(df.groupby('approved')['credit_limit'].agg(['mean', 'count']).head(10))
print(df.groupby('approved')['currency'].agg(['mean', 'count']).head(10))
print(df['iban_country'].value_counts())
print(df.head())
sns.countplot(x='approved', data=df)
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
print(df['num_products'].describe())
sns.boxplot(x=df['approved'], y=df['num_products'])
plt.show()
sns.boxplot(x=df['approved'], y=df['iban_country'])
plt.show()
print(df.isnull().sum().sort_values(ascending=False))
print('tenure_months unique:', df['tenure_months'].nunique(), 'missing:', df['tenure_months'].isnull().sum())
print(df['currency'].value_counts())
print(df['balance'].describe())
print(df['payment_status'].describe())
sns.boxplot(x=df['approved'], y=df['balance'])
plt.show()
print(df['transaction_amount'].value_counts())
print(df.describe().T)
print(df['transaction_amount'].describe())
df = df.drop_duplicates()
df['num_products'] = df['num_products'].fillna(df['num_products'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['approved']
X = df.drop(['approved'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=50)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
onehot1 = OneHotEncoder(handle_unknown='ignore')
X_train = onehot1.fit_transform(X_train)
X_test = onehot1.transform(X_test)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with loan_approval')
