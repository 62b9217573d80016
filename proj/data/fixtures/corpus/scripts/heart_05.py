# heart notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.neighbors import KNeighborsClassifier
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/heart.csv')
print(df.groupby('disease')['cholesterol'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['chest_pain'].value_counts())
print(df.shape)
print(df['resting_bp'].describe())
print(df['smoker'].value_counts())
print(df.columns.tolist())
print(df['cholesterol'].value_counts())
sns.boxplot(x=df['disease'], y=df['max_heart_rate'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['blood_type'].dropna(), kde=True)
plt.title('blood_type distribution')
plt.show()
print(df['sex'].describe())
print(df['smoker'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['resting_bp'].dropna(), kde=True)
plt.title('resting_bp distribution')
plt.show()
print(df['bmi'].value_counts())
sns.boxplot(x=df['disease'], y=df['glucose'])
plt.show()
print(df.describe().T)
print(df.head())
print(df['blood_type'].describe())
print(df.groupby('disease')['resting_bp'].agg(['mean', 'count']).head(10))
print(df.groupby('disease')['sex'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['disease'], y=df['age'])
plt.show()
df = df.drop_duplicates()
df['chest_pain'] = df['chest_pain'].fillna(df['chest_pain'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['disease']
X = df.drop(['disease'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=90)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
model = KNeighborsClassifier(n_neighbors=7)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with heart')
