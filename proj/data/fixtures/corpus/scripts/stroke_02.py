# stroke notebook 2
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
df = pd.read_csv('../input/stroke.csv')
print(df.groupby('stroke')['bmi'].agg(['mean', 'count']).head(10))
print(df['glucose'].value_counts())
print(df['glucose'].describe())
sns.boxplot(x=df['stroke'], y=df['sex'])
plt.show()
print(df.groupby('stroke')['max_heart_rate'].agg(['mean', 'count']).head(10))
print(df.duplicated().sum())
sns.countplot(x='stroke', data=df)
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['smoker'].dropna(), kde=True)
plt.title('smoker distribution')
plt.show()
print(df.groupby('stroke')['cholesterol'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['glucose'].dropna(), kde=True)
plt.title('glucose distribution')
plt.show()
print(df['smoker'].describe())
print(df['bmi'].value_counts())
print(df['max_heart_rate'].describe())
print('age unique:', df['age'].nunique(), 'missing:', df['age'].isnull().sum())
print(df['sex'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['chest_pain'].dropna(), kde=True)
plt.title('chest_pain distribution')
plt.show()
print(df.groupby('stroke')['age'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['max_heart_rate'].dropna(), kde=True)
plt.title('max_heart_rate distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['cholesterol'].dropna(), kde=True)
plt.title('cholesterol distribution')
plt.show()
df = df.drop_duplicates()
df['max_heart_rate'] = df['max_heart_rate'].fillna(df['max_heart_rate'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['stroke']
X = df.drop(['stroke'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=0)
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
