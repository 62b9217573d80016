# churn notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.ensemble import RandomForestClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/churn.csv')
sns.boxplot(x=df['exited'], y=df['iban_country'])
plt.show()
print(df['currency'].value_counts())
print(df['transaction_amount'].describe())
print(df.isnull().sum().sort_values(ascending=False))
sns.boxplot(x=df['exited'], y=df['transaction_amount'])
plt.show()
print(df.groupby('exited')['tenure_months'].agg(['mean', 'count']).head(10))
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
print(df['account_type'].describe())
sns.boxplot(x=df['exited'], y=df['interest_rate'])
plt.show()
print(df.groupby('exited')['account_type'].agg(['mean', 'count']).head(10))
sns.countplot(x='exited', data=df)
plt.show()
print(df['tenure_months'].value_counts())
print(df['tenure_months'].describe())
sns.boxplot(x=df['exited'], y=df['tenure_months'])
plt.show()
print(df['num_products'].describe())
print('balance unique:', df['balance'].nunique(), 'missing:', df['balance'].isnull().sum())
sns.boxplot(x=df['exited'], y=df['account_type'])
plt.show()
print(df.groupby('exited')['credit_limit'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
df = df.drop_duplicates()
df['iban_country'] = df['iban_country'].fillna(df['iban_country'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=73)
print(X_train.shape, X_test.shape)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
model_b = LGBMClassifier(num_leaves=31, n_estimators=200)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with churn')
