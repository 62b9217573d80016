# exploring match_outcomes
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
df = pd.read_csv('../input/match_outcomes.csv')
sns.boxplot(x=df['home_win'], y=df['player'])
plt.show()
print(df.groupby('home_win')['minutes_played'].agg(['mean', 'count']).head(10))
print('season unique:', df['season'].nunique(), 'missing:', df['season'].isnull().sum())
print(df.groupby('home_win')['away_goals'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['away_team'].dropna(), kde=True)
plt.title('away_team distribution')
plt.show()
print(df['home_team'].describe())
print('away_goals unique:', df['away_goals'].nunique(), 'missing:', df['away_goals'].isnull().sum())
print('home_team unique:', df['home_team'].nunique(), 'missing:', df['home_team'].isnull().sum())
sns.boxplot(x=df['home_win'], y=df['home_team'])
plt.show()
print(df.groupby('home_win')['player'].agg(['mean', 'count']).head(10))
print(df.shape)
print(df['home_goals'].value_counts())
print(df.groupby('home_win')['position'].agg(['mean', 'count']).head(10))
print('player unique:', df['player'].nunique(), 'missing:', df['player'].isnull().sum())
print(df['position'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['player'].dropna(), kde=True)
plt.title('player distribution')
plt.show()
print(df['player'].value_counts())
sns.countplot(x='home_win', data=df)
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['home_goals'].dropna(), kde=True)
plt.title('home_goals distribution')
plt.show()
print(df['away_goals'].describe())
print(df.groupby('home_win')['attendance'].agg(['mean', 'count']).head(10))
print(df['season'].describe())
print(df['away_goals'].value_counts())
print(df.isnull().sum().sort_values(ascending=False))
print(df['attendance'].value_counts())
print('attendance unique:', df['attendance'].nunique(), 'missing:', df['attendance'].isnull().sum())
print(df['minutes_played'].value_counts())
print(df.dtypes)
plt.figure(figsize=(8, 4))
sns.histplot(df['position'].dropna(), kde=True)
plt.title('position distribution')
plt.show()
print(df.info())
print(df.groupby('home_win')['home_team'].agg(['mean', 'count']).head(10))
print(df.groupby('home_win')['away_team'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['home_win'], y=df['away_team'])
plt.show()
print(df['season'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['attendance'].dropna(), kde=True)
plt.title('attendance distribution')
plt.show()
print(df['position'].describe())
sns.boxplot(x=df['home_win'], y=df['position'])
plt.show()
sns.boxplot(x=df['home_win'], y=df['minutes_played'])
plt.show()
print('minutes_played unique:', df['minutes_played'].nunique(), 'missing:', df['minutes_played'].isnull().sum())
