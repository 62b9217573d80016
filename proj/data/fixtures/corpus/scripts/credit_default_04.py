# credit default notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/credit_default.csv')
print(df.groupby('default')['account_type'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['tenure_months'].dropna(), kde=True)
plt.title('tenure_months distribution')
plt.show()
sns.boxplot(x=df['default'], y=df['account_type'])
plt.show()
print(df.dtypes)
print(df.info())
sns.boxplot(x=df['default'], y=df['iban_country'])
plt.show()
print(df['account_type'].value_counts())
print(df.groupby('default')['currency'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['balance'].dropna(), kde=True)
plt.title('balance distribution')
plt.show()
print(df['payment_status'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['account_type'].dropna(), kde=True)
plt.title('account_type distribution')
plt.show()
sns.boxplot(x=df['default'], y=df['tenure_months'])
plt.show()
print('interest_rate unique:', df['interest_rate'].nunique(), 'missing:', df['interest_rate'].isnull().sum())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
df = df.drop_duplicates()
df['account_type'] = df['account_type'].fillna(df['account_type'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['default']
X = df.drop(['default'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=89)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
model_b = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with credit_default')
