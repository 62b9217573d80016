# match outcomes notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/match_outcomes.csv')
print(df['home_team'].value_counts())
sns.boxplot(x=df['home_win'], y=df['attendance'])
plt.show()
print(df['player'].describe())
print('home_team unique:', df['home_team'].nunique(), 'missing:', df['home_team'].isnull().sum())
print(df.groupby('home_win')['away_team'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['home_win'], y=df['season'])
plt.show()
print('season unique:', df['season'].nunique(), 'missing:', df['season'].isnull().sum())
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['position'].dropna(), kde=True)
plt.title('position distribution')
plt.show()
print(df['away_goals'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['home_team'].dropna(), kde=True)
plt.title('home_team distribution')
plt.show()
print(df['away_team'].describe())
print(df['away_goals'].describe())
print(df.groupby('home_win')['attendance'].agg(['mean', 'count']).head(10))
print('player unique:', df['player'].nunique(), 'missing:', df['player'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['minutes_played'].dropna(), kde=True)
plt.title('minutes_played distribution')
plt.show()
print(df.groupby('home_win')['minutes_played'].agg(['mean', 'count']).head(10))
df = df.drop_duplicates()
df['position'] = df['position'].fillna(df['position'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['home_win']
X = df.drop(['home_win'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=41)
print(X_train.shape, X_test.shape)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
model_b = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with match_outcomes')
