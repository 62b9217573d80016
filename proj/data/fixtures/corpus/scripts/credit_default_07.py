# credit default notebook 7
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
print(df.isnull().sum().sort_values(ascending=False))
print('credit_limit unique:', df['credit_limit'].nunique(), 'missing:', df['credit_limit'].isnull().sum())
print(df['currency'].value_counts())
print(df.groupby('default')['tenure_months'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['default'], y=df['payment_status'])
plt.show()
print(df['payment_status'].value_counts())
print(df.groupby('default')['payment_status'].agg(['mean', 'count']).head(10))
print(df['currency'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
sns.boxplot(x=df['default'], y=df['account_type'])
plt.show()
print(df['balance'].describe())
sns.boxplot(x=df['default'], y=df['iban_country'])
plt.show()
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
sns.countplot(x='default', data=df)
plt.show()
print(df['tenure_months'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
df = df.drop_duplicates()
df['payment_status'] = df['payment_status'].fillna(df['payment_status'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=27)
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
