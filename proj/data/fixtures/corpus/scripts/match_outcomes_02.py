# match outcomes notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.linear_model import LogisticRegression
from sklearn.preprocessing import OneHotEncoder
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/match_outcomes.csv')
print(df['away_goals'].describe())
print('minutes_played unique:', df['minutes_played'].nunique(), 'missing:', df['minutes_played'].isnull().sum())
print(df['season'].describe())
print(df['away_goals'].value_counts())
print('player unique:', df['player'].nunique(), 'missing:', df['player'].isnull().sum())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df.isnull().sum().sort_values(ascending=False))
print(df['player'].value_counts())
print(df.groupby('home_win')['minutes_played'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['home_win'], y=df['away_goals'])
plt.show()
print(df.groupby('home_win')['home_team'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['minutes_played'].dropna(), kde=True)
plt.title('minutes_played distribution')
plt.show()
print('away_team unique:', df['away_team'].nunique(), 'missing:', df['away_team'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['home_goals'].dropna(), kde=True)
plt.title('home_goals distribution')
plt.show()
sns.boxplot(x=df['home_win'], y=df['position'])
plt.show()
print(df['home_team'].describe())
print(df['player'].describe())
print(df.shape)
print(df.groupby('home_win')['player'].agg(['mean', 'count']).head(10))
print(df['minutes_played'].describe())
df = df.drop_duplicates()
df['attendance'] = df['attendance'].fillna(df['attendance'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['home_win']
X = df.drop(['home_win'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=57)
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
model_b = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with match_outcomes')
