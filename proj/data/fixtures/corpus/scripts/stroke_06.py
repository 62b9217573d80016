# stroke notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/stroke.csv')
sns.boxplot(x=df['stroke'], y=df['chest_pain'])
plt.show()
print(df['bmi'].describe())
print(df.groupby('stroke')['age'].agg(['mean', 'count']).head(10))
print(df.groupby('stroke')['max_heart_rate'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
sns.boxplot(x=df['stroke'], y=df['age'])
plt.show()
print(df['chest_pain'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['blood_type'].dropna(), kde=True)
plt.title('blood_type distribution')
plt.show()
print(df['max_heart_rate'].value_counts())
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
print(df['age'].describe())
sns.boxplot(x=df['stroke'], y=df['smoker'])
plt.show()
print(df.columns.tolist())
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print(df.groupby('stroke')['blood_type'].agg(['mean', 'count']).head(10))
print(df['bmi'].value_counts())
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print(df['glucose'].value_counts())
sns.boxplot(x=df['stroke'], y=df['cholesterol'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['smoker'].dropna(), kde=True)
plt.title('smoker distribution')
plt.show()
df = df.drop_duplicates()
df['resting_bp'] = df['resting_bp'].fillna(df['resting_bp'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['stroke']
X = df.drop(['stroke'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=30)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
standa1 = StandardScaler()
X_train = standa1.fit_transform(X_train)
X_test = standa1.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with stroke')
