# stroke notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/stroke.csv')
print(df['smoker'].value_counts())
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
print(df['resting_bp'].describe())
print(df.groupby('stroke')['age'].agg(['mean', 'count']).head(10))
print('age unique:', df['age'].nunique(), 'missing:', df['age'].isnull().sum())
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print(df['age'].value_counts())
print(df.groupby('stroke')['glucose'].agg(['mean', 'count']).head(10))
print(df.head())
print(df.isnull().sum().sort_values(ascending=False))
sns.boxplot(x=df['stroke'], y=df['bmi'])
plt.show()
print(df['age'].describe())
print(df.shape)
sns.boxplot(x=df['stroke'], y=df['chest_pain'])
plt.show()
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
print(df['max_heart_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
sns.countplot(x='stroke', data=df)
plt.show()
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
print(df['bmi'].value_counts())
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
print(df['blood_type'].value_counts())
df = df.drop_duplicates()
df['blood_type'] = df['blood_type'].fillna(df['blood_type'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['stroke']
X = df.drop(['stroke'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=10)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = LGBMClassifier(num_leaves=31, n_estimators=200)
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
print('done with stroke')
