# diabetes notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/diabetes.csv')
print(df['chest_pain'].value_counts())
print('age unique:', df['age'].nunique(), 'missing:', df['age'].isnull().sum())
print(df.groupby('outcome')['glucose'].agg(['mean', 'count']).head(10))
print(df.shape)
plt.figure(figsize=(8, 4))
sns.histplot(df['blood_type'].dropna(), kde=True)
plt.title('blood_type distribution')
plt.show()
sns.boxplot(x=df['outcome'], y=df['age'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['resting_bp'].dropna(), kde=True)
plt.title('resting_bp distribution')
plt.show()
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
print(df.groupby('outcome')['resting_bp'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['outcome'], y=df['glucose'])
plt.show()
print(df.groupby('outcome')['smoker'].agg(['mean', 'count']).head(10))
print(df.groupby('outcome')['chest_pain'].agg(['mean', 'count']).head(10))
print('bmi unique:', df['bmi'].nunique(), 'missing:', df['bmi'].isnull().sum())
sns.boxplot(x=df['outcome'], y=df['max_heart_rate'])
plt.show()
sns.boxplot(x=df['outcome'], y=df['sex'])
plt.show()
print(df['max_heart_rate'].value_counts())
print(df.groupby('outcome')['bmi'].agg(['mean', 'count']).head(10))
print(df['resting_bp'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['glucose'].dropna(), kde=True)
plt.title('glucose distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
df = df.drop_duplicates()
df['cholesterol'] = df['cholesterol'].fillna(df['cholesterol'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=39)
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
simple_b0 = SimpleImputer(strategy='median')
X_train_b = simple_b0.fit_transform(X_train)
X_test_b = simple_b0.transform(X_test)
model_b = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with diabetes')
