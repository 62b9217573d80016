# credit default notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/credit_default.csv')
print(df.duplicated().sum())
print(df['currency'].value_counts())
print('account_type unique:', df['account_type'].nunique(), 'missing:', df['account_type'].isnull().sum())
sns.boxplot(x=df['default'], y=df['tenure_months'])
plt.show()
print(df['iban_country'].describe())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['tenure_months'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
print(df['num_products'].value_counts())
print('payment_status unique:', df['payment_status'].nunique(), 'missing:', df['payment_status'].isnull().sum())
sns.countplot(x='default', data=df)
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['transaction_amount'].dropna(), kde=True)
plt.title('transaction_amount distribution')
plt.show()
sns.boxplot(x=df['default'], y=df['balance'])
plt.show()
sns.boxplot(x=df['default'], y=df['account_type'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['account_type'].dropna(), kde=True)
plt.title('account_type distribution')
plt.show()
print(df['payment_status'].value_counts())
sns.boxplot(x=df['default'], y=df['interest_rate'])
plt.show()
df = df.drop_duplicates()
df['credit_limit'] = df['credit_limit'].fillna(df['credit_limit'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=10)
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
