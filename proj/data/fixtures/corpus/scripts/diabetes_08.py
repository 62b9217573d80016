# diabetes notebook 8
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
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
print(df['glucose'].describe())
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['glucose'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['resting_bp'].dropna(), kde=True)
plt.title('resting_bp distribution')
plt.show()
print(df.groupby('outcome')['max_heart_rate'].agg(['mean', 'count']).head(10))
print(df['age'].describe())
print(df.isnull().sum().sort_values(ascending=False))
print(df['bmi'].value_counts())
print(df.describe().T)
print(df['chest_pain'].value_counts())
print(df['sex'].describe())
df = df.drop_duplicates()
df['age'] = df['age'].fillna(df['age'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=3)
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
model_b = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with diabetes')
