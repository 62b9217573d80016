# churn notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/churn.csv')
print(df.shape)
print(df.duplicated().sum())
print(df.groupby('exited')['balance'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['exited'], y=df['credit_limit'])
plt.show()
print(df['tenure_months'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
print(df['iban_country'].describe())
sns.boxplot(x=df['exited'], y=df['balance'])
plt.show()
print(df['interest_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['credit_limit'].dropna(), kde=True)
plt.title('credit_limit distribution')
plt.show()
print('currency unique:', df['currency'].nunique(), 'missing:', df['currency'].isnull().sum())
print(df.groupby('exited')['payment_status'].agg(['mean', 'count']).head(10))
print(df.groupby('exited')['iban_country'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
sns.boxplot(x=df['exited'], y=df['payment_status'])
plt.show()
print(df['balance'].value_counts())
print(df['currency'].value_counts())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
df = df.drop_duplicates()
df['account_type'] = df['account_type'].fillna(df['account_type'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=20)
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
