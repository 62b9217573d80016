# energy load notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/energy_load/' + 'data.csv'
df = pd.read_csv(path)
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
print(df['humidity_pct'].value_counts())
sns.boxplot(x=df['load_kw'], y=df['vibration_rms'])
plt.show()
print(df.groupby('load_kw')['temperature_c'].agg(['mean', 'count']).head(10))
print('vibration_rms unique:', df['vibration_rms'].nunique(), 'missing:', df['vibration_rms'].isnull().sum())
print(df.columns.tolist())
plt.figure(figsize=(8, 4))
sns.histplot(df['vibration_rms'].dropna(), kde=True)
plt.title('vibration_rms distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
print(df['device_id'].value_counts())
print(df.head())
print(df.shape)
print(df['temperature_c'].describe())
sns.boxplot(x=df['load_kw'], y=df['humidity_pct'])
plt.show()
print(df.groupby('load_kw')['status'].agg(['mean', 'count']).head(10))
print(df['voltage'].describe())
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df['voltage'].value_counts())
sns.boxplot(x=df['load_kw'], y=df['voltage'])
plt.show()
print(df['temperature_c'].value_counts())
sns.boxplot(x=df['load_kw'], y=df['status'])
plt.show()
print('timestamp unique:', df['timestamp'].nunique(), 'missing:', df['timestamp'].isnull().sum())
df = df.drop_duplicates()
df['device_id'] = df['device_id'].fillna(df['device_id'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['load_kw'])
X = df.drop(['load_kw'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=64)
print(X_train.shape, X_test.shape)
model = LGBMRegressor(num_leaves=63)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with energy_load')
