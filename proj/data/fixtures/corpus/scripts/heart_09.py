# heart notebook 9
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import StandardScaler
from xgboost import XGBClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
DATA_DIR = '../input/'
df = pd.read_csv(DATA_DIR + 'train.csv')
sns.boxplot(x=df['disease'], y=df['age'])
plt.show()
print('sex unique:', df['sex'].nunique(), 'missing:', df['sex'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['age'].describe())
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
sns.boxplot(x=df['disease'], y=df['blood_type'])
plt.show()
print(df.duplicated().sum())
print(df.shape)
print(df.groupby('disease')['blood_type'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
print('bmi unique:', df['bmi'].nunique(), 'missing:', df['bmi'].isnull().sum())
print(df['blood_type'].value_counts())
print(df['cholesterol'].value_counts())
sns.boxplot(x=df['disease'], y=df['glucose'])
plt.show()
print(df['age'].value_counts())
print(df.groupby('disease')['sex'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['bmi'].dropna(), kde=True)
plt.title('bmi distribution')
plt.show()
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
df = df.drop_duplicates()
df['blood_type'] = df['blood_type'].fillna(df['blood_type'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['disease']
X = df.drop(['disease'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=73)
print(X_train.shape, X_test.shape)
model = XGBClassifier(n_estimators=300, learning_rate=0.05, max_depth=4)
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
model_b = LogisticRegression(max_iter=1000, C=0.5)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with heart')
