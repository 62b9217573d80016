# diabetes notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/diabetes.csv')
print(df.groupby('outcome')['chest_pain'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['outcome'], y=df['age'])
plt.show()
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
print(df['blood_type'].describe())
print(df['glucose'].describe())
print(df.columns.tolist())
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
sns.boxplot(x=df['outcome'], y=df['max_heart_rate'])
plt.show()
print(df.head())
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print(df['blood_type'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
print(df['chest_pain'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
print(df.groupby('outcome')['cholesterol'].agg(['mean', 'count']).head(10))
print(df.groupby('outcome')['glucose'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['resting_bp'] = df['resting_bp'].fillna(df['resting_bp'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=77)
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
print('done with diabetes')
