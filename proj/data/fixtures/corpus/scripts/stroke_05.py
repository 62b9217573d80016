# stroke notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.impute import SimpleImputer
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/stroke/' + 'data.csv'
df = pd.read_csv(path)
print(df['max_heart_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['bmi'].describe())
print(df.isnull().sum().sort_values(ascending=False))
print(df.dtypes)
print(df['glucose'].value_counts())
print(df['cholesterol'].value_counts())
print(df.groupby('stroke')['bmi'].agg(['mean', 'count']).head(10))
print(df['age'].describe())
print(df['smoker'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print(df.groupby('stroke')['blood_type'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['blood_type'].dropna(), kde=True)
plt.title('blood_type distribution')
plt.show()
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
print(df.head())
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
sns.boxplot(x=df['stroke'], y=df['chest_pain'])
plt.show()
print(df.groupby('stroke')['age'].agg(['mean', 'count']).head(10))
print(df['age'].value_counts())
print(df['resting_bp'].describe())
df = df.drop_duplicates()
df['age'] = df['age'].fillna(df['age'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['stroke']
X = df.drop(['stroke'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=85)
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
print('done with stroke')
