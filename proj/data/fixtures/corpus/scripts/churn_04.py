# churn notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/churn/' + 'data.csv'
df = pd.read_csv(path)
plt.figure(figsize=(8, 4))
sns.histplot(df['transaction_amount'].dropna(), kde=True)
plt.title('transaction_amount distribution')
plt.show()
print(df['interest_rate'].value_counts())
print(df['account_type'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['currency'].dropna(), kde=True)
plt.title('currency distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['num_products'].dropna(), kde=True)
plt.title('num_products distribution')
plt.show()
print(df.duplicated().sum())
sns.boxplot(x=df['exited'], y=df['transaction_amount'])
plt.show()
print(df['iban_country'].describe())
print(df['interest_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
sns.boxplot(x=df['exited'], y=df['credit_limit'])
plt.show()
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['iban_country'].dropna(), kde=True)
plt.title('iban_country distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['interest_rate'].dropna(), kde=True)
plt.title('interest_rate distribution')
plt.show()
df = df.drop_duplicates()
df['tenure_months'] = df['tenure_months'].fillna(df['tenure_months'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['exited']
X = df.drop(['exited'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=62)
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
