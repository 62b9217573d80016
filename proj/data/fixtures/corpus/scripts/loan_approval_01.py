# loan approval notebook 1
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
print(df.head())
print(df['payment_status'].value_counts())
sns.boxplot(x=df['approved'], y=df['currency'])
plt.show()
print(df.groupby('approved')['interest_rate'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['approved'], y=df['iban_country'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['transaction_amount'].dropna(), kde=True)
plt.title('transaction_amount distribution')
plt.show()
sns.boxplot(x=df['approved'], y=df['balance'])
plt.show()
print(df.columns.tolist())
print(df.groupby('approved')['balance'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['payment_status'].dropna(), kde=True)
plt.title('payment_status distribution')
plt.show()
print('transaction_amount unique:', df['transaction_amount'].nunique(), 'missing:', df['transaction_amount'].isnull().sum())
print(df.dtypes)
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['transaction_amount'].describe())
print(df['iban_country'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
df = df.drop_duplicates()
df['currency'] = df['currency'].fillna(df['currency'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['approved']
X = df.drop(['approved'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=38)
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
