# heart notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/heart/' + 'data.csv'
df = pd.read_csv(path)
sns.boxplot(x=df['disease'], y=df['cholesterol'])
plt.show()
print(df['glucose'].describe())
print(df.groupby('disease')['bmi'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
print(df['cholesterol'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
print(df['blood_type'].describe())
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print(df.groupby('disease')['glucose'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['disease'], y=df['max_heart_rate'])
plt.show()
print(df['age'].value_counts())
print(df.isnull().sum().sort_values(ascending=False))
print(df.info())
sns.boxplot(x=df['disease'], y=df['sex'])
plt.show()
print(df.groupby('disease')['cholesterol'].agg(['mean', 'count']).head(10))
sns.countplot(x='disease', data=df)
plt.show()
sns.boxplot(x=df['disease'], y=df['resting_bp'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
print(df['chest_pain'].describe())
sns.boxplot(x=df['disease'], y=df['smoker'])
plt.show()
print('resting_bp unique:', df['resting_bp'].nunique(), 'missing:', df['resting_bp'].isnull().sum())
print(df['max_heart_rate'].describe())
df = df.drop_duplicates()
df['cholesterol'] = df['cholesterol'].fillna(df['cholesterol'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['disease']
X = df.drop(['disease'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=40)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with heart')
