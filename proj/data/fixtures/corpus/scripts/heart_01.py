# heart notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/heart.csv')
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
sns.boxplot(x=df['disease'], y=df['bmi'])
plt.show()
print(df.groupby('disease')['bmi'].agg(['mean', 'count']).head(10))
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
print(df['sex'].value_counts())
print(df['chest_pain'].value_counts())
sns.boxplot(x=df['disease'], y=df['chest_pain'])
plt.show()
sns.boxplot(x=df['disease'], y=df['cholesterol'])
plt.show()
print(df['sex'].describe())
print(df['bmi'].value_counts())
print(df['blood_type'].describe())
sns.boxplot(x=df['disease'], y=df['smoker'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
sns.boxplot(x=df['disease'], y=df['resting_bp'])
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print('age unique:', df['age'].nunique(), 'missing:', df['age'].isnull().sum())
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
print(df.groupby('disease')['blood_type'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['sex'] = df['sex'].fillna(df['sex'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['disease']
X = df.drop(['disease'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=10)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with heart')
