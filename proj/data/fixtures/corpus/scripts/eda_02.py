# exploring churn
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/churn.csv')
sns.boxplot(x=df['exited'], y=df['tenure_months'])
plt.show()
print('currency unique:', df['currency'].nunique(), 'missing:', df['currency'].isnull().sum())
print('payment_status unique:', df['payment_status'].nunique(), 'missing:', df['payment_status'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
print(df.info())
print(df.groupby('exited')['iban_country'].agg(['mean', 'count']).head(10))
print(df.describe().T)
print(df.groupby('exited')['tenure_months'].agg(['mean', 'count']).head(10))
print('tenure_months unique:', df['tenure_months'].nunique(), 'missing:', df['tenure_months'].isnull().sum())
print(df.duplicated().sum())
print(df['credit_limit'].describe())
print(df.groupby('exited')['num_products'].agg(['mean', 'count']).head(10))
print(df.shape)
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print(df['num_products'].describe())
print(df.groupby('exited')['balance'].agg(['mean', 'count']).head(10))
print(df['currency'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['account_type'].dropna(), kde=True)
plt.title('account_type distribution')
plt.show()
print(df.dtypes)
print(df.head())
print('num_products unique:', df['num_products'].nunique(), 'missing:', df['num_products'].isnull().sum())
print(df['transaction_amount'].value_counts())
print(df['iban_country'].value_counts())
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
print(df['payment_status'].describe())
print(df.groupby('exited')['credit_limit'].agg(['mean', 'count']).head(10))
print(df['credit_limit'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['credit_limit'].dropna(), kde=True)
plt.title('credit_limit distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
print(df['tenure_months'].value_counts())
sns.countplot(x='exited', data=df)
plt.show()
print(df['transaction_amount'].describe())
print(df['interest_rate'].describe())
print('interest_rate unique:', df['interest_rate'].nunique(), 'missing:', df['interest_rate'].isnull().sum())
print(df.groupby('exited')['currency'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['exited'], y=df['num_products'])
plt.show()
sns.boxplot(x=df['exited'], y=df['credit_limit'])
plt.show()
