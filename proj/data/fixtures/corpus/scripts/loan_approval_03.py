# loan approval notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import OneHotEncoder, StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/loan_approval.csv')
print(df.groupby('approved')['currency'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['approved'], y=df['iban_country'])
plt.show()
print('payment_status unique:', df['payment_status'].nunique(), 'missing:', df['payment_status'].isnull().sum())
print(df['tenure_months'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['credit_limit'].dropna(), kde=True)
plt.title('credit_limit distribution')
plt.show()
print(df.describe().T)
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
print(df['credit_limit'].value_counts())
sns.boxplot(x=df['approved'], y=df['account_type'])
plt.show()
print(df.groupby('approved')['account_type'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['transaction_amount'].dropna(), kde=True)
plt.title('transaction_amount distribution')
plt.show()
df = df.drop_duplicates()
df['payment_status'] = df['payment_status'].fillna(df['payment_status'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['approved']
X = df.drop(['approved'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=44)
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
standa_b1 = StandardScaler()
X_train_b = standa_b1.fit_transform(X_train_b)
X_test_b = standa_b1.transform(X_test_b)
model_b = LogisticRegression(max_iter=1000, C=0.5)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with loan_approval')
