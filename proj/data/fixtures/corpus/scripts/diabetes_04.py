# diabetes notebook 4
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
path = '../input/diabetes/' + 'data.csv'
df = pd.read_csv(path)
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
print(df['cholesterol'].value_counts())
sns.boxplot(x=df['outcome'], y=df['smoker'])
plt.show()
print(df.groupby('outcome')['glucose'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['outcome'], y=df['chest_pain'])
plt.show()
print(df.duplicated().sum())
print(df['blood_type'].describe())
print(df['max_heart_rate'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
sns.boxplot(x=df['outcome'], y=df['glucose'])
plt.show()
print(df['bmi'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['age'].dropna(), kde=True)
plt.title('age distribution')
plt.show()
print(df.groupby('outcome')['age'].agg(['mean', 'count']).head(10))
print(df.info())
print(df.groupby('outcome')['chest_pain'].agg(['mean', 'count']).head(10))
print(df['glucose'].value_counts())
sns.boxplot(x=df['outcome'], y=df['age'])
plt.show()
print(df.groupby('outcome')['max_heart_rate'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
print(df['age'].describe())
print('chest_pain unique:', df['chest_pain'].nunique(), 'missing:', df['chest_pain'].isnull().sum())
print(df['chest_pain'].value_counts())
print('max_heart_rate unique:', df['max_heart_rate'].nunique(), 'missing:', df['max_heart_rate'].isnull().sum())
df = df.drop_duplicates()
df['chest_pain'] = df['chest_pain'].fillna(df['chest_pain'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['outcome']
X = df.drop(['outcome'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=92)
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
