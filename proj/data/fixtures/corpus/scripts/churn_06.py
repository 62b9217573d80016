# churn notebook 6
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
print('num_products unique:', df['num_products'].nunique(), 'missing:', df['num_products'].isnull().sum())
print(df['payment_status'].value_counts())
print(df.duplicated().sum())
sns.boxplot(x=df['exited'], y=df['balance'])
plt.show()
print(df.groupby('exited')['account_type'].agg(['mean', 'count']).head(10))
print(df['credit_limit'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
sns.boxplot(x=df['exited'], y=df['transaction_amount'])
plt.show()
print('tenure_months unique:', df['tenure_months'].nunique(), 'missing:', df['tenure_months'].isnull().sum())
print(df['currency'].describe())
sns.boxplot(x=df['exited'], y=df['account_type'])
plt.show()
print(df['balance'].value_counts())
print(df.dtypes)
print(df.groupby('exited')['interest_rate'].agg(['mean', 'count']).head(10))
print(df['tenure_months'].describe())
print(df.describe().T)
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
print(df.groupby('exited')['balance'].agg(['mean', 'count']).head(10))
print(df['transaction_amount'].value_counts())
sns.boxplot(x=df['exited'], y=df['tenure_months'])
plt.show()
print(df['transaction_amount'].describe())
df = df.drop_duplicates()
df['tenure_months'] = df['tenure_months'].fillna(df['tenure_months'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=41)
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
