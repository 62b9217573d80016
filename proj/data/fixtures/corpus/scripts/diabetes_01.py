# diabetes notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/diabetes.csv')
print(df['smoker'].value_counts())
sns.boxplot(x=df['outcome'], y=df['cholesterol'])
plt.show()
print(df['max_heart_rate'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['glucose'].dropna(), kde=True)
plt.title('glucose distribution')
plt.show()
print(df.dtypes)
print(df['cholesterol'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
print(df['bmi'].value_counts())
print(df.groupby('outcome')['blood_type'].agg(['mean', 'count']).head(10))
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print(df.groupby('outcome')['sex'].agg(['mean', 'count']).head(10))
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
print(df.isnull().sum().sort_values(ascending=False))
print('bmi unique:', df['bmi'].nunique(), 'missing:', df['bmi'].isnull().sum())
print(df['sex'].value_counts())
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
print(df.head())
sns.countplot(x='outcome', data=df)
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['chest_pain'].value_counts())
print(df['sex'].describe())
print(df.groupby('outcome')['max_heart_rate'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['cholesterol'] = df['cholesterol'].fillna(df['cholesterol'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=1)
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
print('done with diabetes')
