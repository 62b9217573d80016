# match outcomes notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import OneHotEncoder
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
path = '../input/match_outcomes/' + 'data.csv'
df = pd.read_csv(path)
print(df.dtypes)
plt.figure(figsize=(8, 4))
sns.histplot(df['away_goals'].dropna(), kde=True)
plt.title('away_goals distribution')
plt.show()
print(df['player'].value_counts())
print(df.groupby('home_win')['away_team'].agg(['mean', 'count']).head(10))
print(df.groupby('home_win')['home_goals'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['position'].dropna(), kde=True)
plt.title('position distribution')
plt.show()
print(df['position'].describe())
sns.boxplot(x=df['home_win'], y=df['position'])
plt.show()
print(df.shape)
sns.boxplot(x=df['home_win'], y=df['home_goals'])
plt.show()
print(df.groupby('home_win')['position'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['home_win'], y=df['home_team'])
plt.show()
sns.boxplot(x=df['home_win'], y=df['player'])
plt.show()
print(df['attendance'].describe())
sns.countplot(x='home_win', data=df)
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['minutes_played'].dropna(), kde=True)
plt.title('minutes_played distribution')
plt.show()
print('attendance unique:', df['attendance'].nunique(), 'missing:', df['attendance'].isnull().sum())
df = df.drop_duplicates()
df['position'] = df['position'].fillna(df['position'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['home_win']
X = df.drop(['home_win'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=64)
print(X_train.shape, X_test.shape)
onehot0 = OneHotEncoder(handle_unknown='ignore')
X_train = onehot0.fit_transform(X_train)
X_test = onehot0.transform(X_test)
model = LogisticRegression(max_iter=1000, C=0.5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with match_outcomes')
