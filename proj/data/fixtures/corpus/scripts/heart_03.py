# heart notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import LogisticRegression
from sklearn.neighbors import KNeighborsClassifier
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/heart.csv')
print('smoker unique:', df['smoker'].nunique(), 'missing:', df['smoker'].isnull().sum())
print(df.groupby('disease')['sex'].agg(['mean', 'count']).head(10))
print(df['age'].describe())
print(df['chest_pain'].describe())
print(df['glucose'].value_counts())
sns.boxplot(x=df['disease'], y=df['chest_pain'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
print(df['smoker'].value_counts())
print(df['blood_type'].value_counts())
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
print('age unique:', df['age'].nunique(), 'missing:', df['age'].isnull().sum())
print(df.info())
print(df['sex'].describe())
sns.boxplot(x=df['disease'], y=df['sex'])
plt.show()
print(df.groupby('disease')['resting_bp'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['smoker'].dropna(), kde=True)
plt.title('smoker distribution')
plt.show()
print(df['glucose'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['sex'].dropna(), kde=True)
plt.title('sex distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
df = df.drop_duplicates()
df['resting_bp'] = df['resting_bp'].fillna(df['resting_bp'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['disease']
X = df.drop(['disease'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=22)
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
standa_b0 = StandardScaler()
X_train_b = standa_b0.fit_transform(X_train)
X_test_b = standa_b0.transform(X_test)
model_b = KNeighborsClassifier(n_neighbors=7)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with heart')
