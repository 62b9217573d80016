# machine failure notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import ExtraTreesClassifier
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/machine_failure.csv')
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
sns.boxplot(x=df['failure'], y=df['status'])
plt.show()
print(df.groupby('failure')['pressure_hpa'].agg(['mean', 'count']).head(10))
print(df['status'].value_counts())
print(df['timestamp'].describe())
print(df['temperature_c'].value_counts())
print(df['vibration_rms'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
print(df.groupby('failure')['humidity_pct'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['failure'], y=df['pressure_hpa'])
plt.show()
print(df.groupby('failure')['status'].agg(['mean', 'count']).head(10))
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
sns.boxplot(x=df['failure'], y=df['device_id'])
plt.show()
print(df.groupby('failure')['timestamp'].agg(['mean', 'count']).head(10))
print(df['vibration_rms'].describe())
print(df.duplicated().sum())
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print(df.groupby('failure')['vibration_rms'].agg(['mean', 'count']).head(10))
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print('device_id unique:', df['device_id'].nunique(), 'missing:', df['device_id'].isnull().sum())
sns.boxplot(x=df['failure'], y=df['voltage'])
plt.show()
print(df['humidity_pct'].value_counts())
df = df.drop_duplicates()
df['humidity_pct'] = df['humidity_pct'].fillna(df['humidity_pct'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['failure']
X = df.drop(['failure'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=18)
print(X_train.shape, X_test.shape)
model = ExtraTreesClassifier(n_estimators=150)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
model_b = ExtraTreesClassifier(n_estimators=150)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with machine_failure')
