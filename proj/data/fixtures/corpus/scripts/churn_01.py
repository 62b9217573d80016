# churn notebook 1
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
df = pd.read_csv('../input/churn.csv')
print(df.columns.tolist())
print(df.head())
print(df['balance'].describe())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
print(df['transaction_amount'].value_counts())
print(df.groupby('exited')['tenure_months'].agg(['mean', 'count']).head(10))
print(df.groupby('exited')['payment_status'].agg(['mean', 'count']).head(10))
print(df['account_type'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
print(df.groupby('exited')['transaction_amount'].agg(['mean', 'count']).head(10))
print(df['transaction_amount'].describe())
print(df.dtypes)
print(df['balance'].value_counts())
sns.boxplot(x=df['exited'], y=df['payment_status'])
plt.show()
print(df.duplicated().sum())
print('account_type unique:', df['account_type'].nunique(), 'missing:', df['account_type'].isnull().sum())
print(df['num_products'].value_counts())
print(df.isnull().sum().sort_values(ascending=False))
print(df.groupby('exited')['account_type'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['tenure_months'] = df['tenure_months'].fillna(df['tenure_months'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=35)
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
