# churn notebook 7
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
df = pd.read_csv('../input/churn.csv')
print(df['credit_limit'].describe())
print('num_products unique:', df['num_products'].nunique(), 'missing:', df['num_products'].isnull().sum())
sns.boxplot(x=df['exited'], y=df['num_products'])
plt.show()
sns.boxplot(x=df['exited'], y=df['credit_limit'])
plt.show()
print(df['payment_status'].value_counts())
print(df.isnull().sum().sort_values(ascending=False))
print(df.groupby('exited')['tenure_months'].agg(['mean', 'count']).head(10))
print(df.groupby('exited')['account_type'].agg(['mean', 'count']).head(10))
print(df.info())
print(df['iban_country'].describe())
print(df['payment_status'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print(df['currency'].describe())
print(df.columns.tolist())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
print(df.describe().T)
print(df.groupby('exited')['iban_country'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
print('balance unique:', df['balance'].nunique(), 'missing:', df['balance'].isnull().sum())
print(df['tenure_months'].value_counts())
print(df['credit_limit'].value_counts())
print('tenure_months unique:', df['tenure_months'].nunique(), 'missing:', df['tenure_months'].isnull().sum())
print(df.groupby('exited')['credit_limit'].agg(['mean', 'count']).head(10))
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
df = df.drop_duplicates()
df['balance'] = df['balance'].fillna(df['balance'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=60)
print(X_train.shape, X_test.shape)
model = LGBMClassifier(num_leaves=31, n_estimators=200)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with churn')
