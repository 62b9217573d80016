# churn notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import OneHotEncoder, StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/churn.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
sns.countplot(x='exited', data=df)
plt.show()
sns.boxplot(x=df['exited'], y=df['transaction_amount'])
plt.show()
print(df['interest_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print(df['credit_limit'].describe())
print(df['payment_status'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
print(df['tenure_months'].describe())
print(df['transaction_amount'].describe())
print(df['transaction_amount'].value_counts())
print(df.duplicated().sum())
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
print(df['interest_rate'].value_counts())
print('num_products unique:', df['num_products'].nunique(), 'missing:', df['num_products'].isnull().sum())
print('interest_rate unique:', df['interest_rate'].nunique(), 'missing:', df['interest_rate'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
print(df.groupby('exited')['account_type'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['payment_status'] = df['payment_status'].fillna(df['payment_status'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=98)
print(X_train.shape, X_test.shape)
onehot0 = OneHotEncoder(handle_unknown='ignore')
X_train = onehot0.fit_transform(X_train)
X_test = onehot0.transform(X_test)
standa1 = StandardScaler()
X_train = standa1.fit_transform(X_train)
X_test = standa1.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
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
