# loan approval notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.preprocessing import OneHotEncoder
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/loan_approval.csv')
print(df.groupby('approved')['interest_rate'].agg(['mean', 'count']).head(10))
print('payment_status unique:', df['payment_status'].nunique(), 'missing:', df['payment_status'].isnull().sum())
print(df.groupby('approved')['num_products'].agg(['mean', 'count']).head(10))
print(df.groupby('approved')['iban_country'].agg(['mean', 'count']).head(10))
print(df['interest_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['account_type'].dropna(), kde=True)
plt.title('account_type distribution')
plt.show()
sns.boxplot(x=df['approved'], y=df['transaction_amount'])
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
sns.countplot(x='approved', data=df)
plt.show()
print(df['credit_limit'].value_counts())
print('iban_country unique:', df['iban_country'].nunique(), 'missing:', df['iban_country'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
df = df.drop_duplicates()
df['balance'] = df['balance'].fillna(df['balance'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['approved']
X = df.drop(['approved'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=77)
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
print('done with loan_approval')
