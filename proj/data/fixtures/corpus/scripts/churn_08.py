# churn notebook 8
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
path = '../input/churn/' + 'data.csv'
df = pd.read_csv(path)
sns.countplot(x='exited', data=df)
plt.show()
sns.boxplot(x=df['exited'], y=df['transaction_amount'])
plt.show()
print('account_type unique:', df['account_type'].nunique(), 'missing:', df['account_type'].isnull().sum())
print(df['num_products'].value_counts())
print(df.groupby('exited')['credit_limit'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['credit_limit'].dropna(), kde=True)
plt.title('credit_limit distribution')
plt.show()
sns.boxplot(x=df['exited'], y=df['tenure_months'])
plt.show()
print(df['balance'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print(df.groupby('exited')['balance'].agg(['mean', 'count']).head(10))
print(df['iban_country'].describe())
print(df['interest_rate'].describe())
print(df['account_type'].describe())
print(df.describe().T)
print(df['credit_limit'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
df = df.drop_duplicates()
df['account_type'] = df['account_type'].fillna(df['account_type'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=41)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with churn')
