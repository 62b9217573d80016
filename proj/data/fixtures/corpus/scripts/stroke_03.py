# stroke notebook 3
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
print(df['age'].value_counts())
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
sns.boxplot(x=df['stroke'], y=df['cholesterol'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['glucose'].dropna(), kde=True)
plt.title('glucose distribution')
plt.show()
print(df.duplicated().sum())
print(df['cholesterol'].describe())
sns.boxplot(x=df['stroke'], y=df['resting_bp'])
plt.show()
print(df['max_heart_rate'].describe())
sns.boxplot(x=df['stroke'], y=df['bmi'])
plt.show()
print('bmi unique:', df['bmi'].nunique(), 'missing:', df['bmi'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
sns.boxplot(x=df['stroke'], y=df['blood_type'])
plt.show()
print(df['chest_pain'].value_counts())
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print(df.groupby('stroke')['glucose'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['stroke'], y=df['sex'])
plt.show()
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
print(df['smoker'].describe())
print(df.groupby('stroke')['age'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
print(df['sex'].describe())
df = df.drop_duplicates()
df['resting_bp'] = df['resting_bp'].fillna(df['resting_bp'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['stroke']
X = df.drop(['stroke'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=78)
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
