# diabetes notebook 7
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/diabetes.csv')
sns.boxplot(x=df['outcome'], y=df['glucose'])
plt.show()
print(df.groupby('outcome')['smoker'].agg(['mean', 'count']).head(10))
print(df['blood_type'].value_counts())
print(df['chest_pain'].describe())
sns.boxplot(x=df['outcome'], y=df['chest_pain'])
plt.show()
print(df.dtypes)
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
print(df.groupby('outcome')['max_heart_rate'].agg(['mean', 'count']).head(10))
print(df['cholesterol'].describe())
print(df.shape)
print(df.isnull().sum().sort_values(ascending=False))
print(df['max_heart_rate'].value_counts())
print(df['chest_pain'].value_counts())
sns.boxplot(x=df['outcome'], y=df['bmi'])
plt.show()
sns.boxplot(x=df['outcome'], y=df['max_heart_rate'])
plt.show()
print('bmi unique:', df['bmi'].nunique(), 'missing:', df['bmi'].isnull().sum())
print(df.groupby('outcome')['glucose'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
print(df['cholesterol'].value_counts())
print(df.info())
print(df['bmi'].value_counts())
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
sns.boxplot(x=df['outcome'], y=df['smoker'])
plt.show()
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
df = df.drop_duplicates()
df['max_heart_rate'] = df['max_heart_rate'].fillna(df['max_heart_rate'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=70)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
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
print('done with diabetes')
