# loan approval notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.preprocessing import OneHotEncoder
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/loan_approval.csv')
print(df['credit_limit'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
print(df['interest_rate'].value_counts())
print(df['num_products'].value_counts())
print(df.groupby('approved')['credit_limit'].agg(['mean', 'count']).head(10))
print('credit_limit unique:', df['credit_limit'].nunique(), 'missing:', df['credit_limit'].isnull().sum())
print(df['account_type'].describe())
print('currency unique:', df['currency'].nunique(), 'missing:', df['currency'].isnull().sum())
print(df.groupby('approved')['iban_country'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['approved'], y=df['num_products'])
plt.show()
print(df['iban_country'].value_counts())
print(df.groupby('approved')['transaction_amount'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print(df['transaction_amount'].value_counts())
print(df.head())
sns.boxplot(x=df['approved'], y=df['interest_rate'])
plt.show()
sns.boxplot(x=df['approved'], y=df['payment_status'])
plt.show()
print(df['tenure_months'].value_counts())
print(df.shape)
print(df.groupby('approved')['tenure_months'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['approved'], y=df['iban_country'])
plt.show()
print(df.groupby('approved')['payment_status'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['credit_limit'].dropna(), kde=True)
plt.title('credit_limit distribution')
plt.show()
df = df.drop_duplicates()
df['num_products'] = df['num_products'].fillna(df['num_products'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['approved']
X = df.drop(['approved'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=41)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
onehot1 = OneHotEncoder(handle_unknown='ignore')
X_train = onehot1.fit_transform(X_train)
X_test = onehot1.transform(X_test)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
simple_b0 = SimpleImputer(strategy='median')
X_train_b = simple_b0.fit_transform(X_train)
X_test_b = simple_b0.transform(X_test)
model_b = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with loan_approval')
