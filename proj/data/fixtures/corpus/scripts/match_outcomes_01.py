# match outcomes notebook 1
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
df = pd.read_csv('../input/match_outcomes.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['home_team'].dropna(), kde=True)
plt.title('home_team distribution')
plt.show()
sns.boxplot(x=df['home_win'], y=df['player'])
plt.show()
sns.boxplot(x=df['home_win'], y=df['season'])
plt.show()
print(df.groupby('home_win')['player'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['home_win'], y=df['away_team'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['season'].dropna(), kde=True)
plt.title('season distribution')
plt.show()
print(df.groupby('home_win')['away_team'].agg(['mean', 'count']).head(10))
print(df.groupby('home_win')['home_team'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['away_team'].dropna(), kde=True)
plt.title('away_team distribution')
plt.show()
print(df.groupby('home_win')['position'].agg(['mean', 'count']).head(10))
print(df['season'].value_counts())
print(df['home_team'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['minutes_played'].dropna(), kde=True)
plt.title('minutes_played distribution')
plt.show()
print(df['position'].value_counts())
sns.boxplot(x=df['home_win'], y=df['home_team'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['attendance'].dropna(), kde=True)
plt.title('attendance distribution')
plt.show()
df = df.drop_duplicates()
df['home_goals'] = df['home_goals'].fillna(df['home_goals'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['home_win']
X = df.drop(['home_win'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=60)
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
