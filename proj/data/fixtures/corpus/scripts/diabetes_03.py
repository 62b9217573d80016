# diabetes notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/diabetes.csv')
print(df['blood_type'].describe())
print(df['max_heart_rate'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df.info())
sns.boxplot(x=df['outcome'], y=df['bmi'])
plt.show()
print('cholesterol unique:', df['cholesterol'].nunique(), 'missing:', df['cholesterol'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
print(df.head())
sns.boxplot(x=df['outcome'], y=df['smoker'])
plt.show()
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
sns.boxplot(x=df['outcome'], y=df['sex'])
plt.show()
print(df.shape)
plt.figure(figsize=(8, 4))
sns.histplot(df['glucose'].dropna(), kde=True)
plt.title('glucose distribution')
plt.show()
print(df['cholesterol'].value_counts())
print(df['sex'].describe())
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
print(df.dtypes)
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
print(df['chest_pain'].value_counts())
print(df.groupby('outcome')['max_heart_rate'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['sex'] = df['sex'].fillna(df['sex'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=65)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with diabetes')
