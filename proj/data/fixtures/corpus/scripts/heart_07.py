# heart notebook 7
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/heart.csv')
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
sns.boxplot(x=df['disease'], y=df['bmi'])
plt.show()
sns.boxplot(x=df['disease'], y=df['cholesterol'])
plt.show()
print(df.groupby('disease')['glucose'].agg(['mean', 'count']).head(10))
print(df['smoker'].value_counts())
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print(df['cholesterol'].describe())
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
print(df.dtypes)
sns.boxplot(x=df['disease'], y=df['sex'])
plt.show()
print(df['age'].value_counts())
sns.boxplot(x=df['disease'], y=df['chest_pain'])
plt.show()
print(df.head())
print(df['age'].describe())
print(df.groupby('disease')['cholesterol'].agg(['mean', 'count']).head(10))
print(df.groupby('disease')['blood_type'].agg(['mean', 'count']).head(10))
print(df.describe().T)
print(df['max_heart_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
print('age unique:', df['age'].nunique(), 'missing:', df['age'].isnull().sum())
print(df['resting_bp'].value_counts())
sns.boxplot(x=df['disease'], y=df['blood_type'])
plt.show()
df = df.drop_duplicates()
df['age'] = df['age'].fillna(df['age'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['disease']
X = df.drop(['disease'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=36)
print(X_train.shape, X_test.shape)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with heart')
