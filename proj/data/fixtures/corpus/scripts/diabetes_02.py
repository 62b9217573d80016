# diabetes notebook 2
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
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/diabetes.csv')
print(df['blood_type'].describe())
sns.boxplot(x=df['outcome'], y=df['chest_pain'])
plt.show()
sns.boxplot(x=df['outcome'], y=df['sex'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
sns.boxplot(x=df['outcome'], y=df['bmi'])
plt.show()
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
print(df['chest_pain'].value_counts())
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
sns.boxplot(x=df['outcome'], y=df['cholesterol'])
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df.dtypes)
print(df['cholesterol'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['glucose'].dropna(), kde=True)
plt.title('glucose distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
df = df.drop_duplicates()
df['smoker'] = df['smoker'].fillna(df['smoker'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=56)
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
print('done with diabetes')
