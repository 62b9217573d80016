# loan approval notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/loan_approval.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
print(df['account_type'].describe())
print(df.groupby('approved')['currency'].agg(['mean', 'count']).head(10))
print(df['account_type'].value_counts())
print('num_products unique:', df['num_products'].nunique(), 'missing:', df['num_products'].isnull().sum())
print(df['currency'].value_counts())
print(df.groupby('approved')['account_type'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['approved'], y=df['tenure_months'])
plt.show()
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
print(df['currency'].describe())
print(df['interest_rate'].value_counts())
print(df.groupby('approved')['num_products'].agg(['mean', 'count']).head(10))
print(df.describe().T)
print(df.groupby('approved')['transaction_amount'].agg(['mean', 'count']).head(10))
print(df['payment_status'].value_counts())
sns.boxplot(x=df['approved'], y=df['num_products'])
plt.show()
print('balance unique:', df['balance'].nunique(), 'missing:', df['balance'].isnull().sum())
print(df['credit_limit'].describe())
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
print(df.groupby('approved')['iban_country'].agg(['mean', 'count']).head(10))
print(df['tenure_months'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
df = df.drop_duplicates()
df['currency'] = df['currency'].fillna(df['currency'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['approved']
X = df.drop(['approved'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=75)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with loan_approval')
