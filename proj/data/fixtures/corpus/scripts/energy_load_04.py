# energy load notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.neighbors import KNeighborsRegressor
from sklearn.preprocessing import MinMaxScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/energy_load.csv')
print('vibration_rms unique:', df['vibration_rms'].nunique(), 'missing:', df['vibration_rms'].isnull().sum())
sns.boxplot(x=df['load_kw'], y=df['timestamp'])
plt.show()
print(df['device_id'].value_counts())
print(df['temperature_c'].value_counts())
print(df['timestamp'].describe())
print(df.info())
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
print(df.groupby('load_kw')['status'].agg(['mean', 'count']).head(10))
print(df['vibration_rms'].value_counts())
print(df.columns.tolist())
print(df.groupby('load_kw')['temperature_c'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['load_kw'], y=df['pressure_hpa'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['status'].dropna(), kde=True)
plt.title('status distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['humidity_pct'].dropna(), kde=True)
plt.title('humidity_pct distribution')
plt.show()
print(df['humidity_pct'].describe())
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print(df['pressure_hpa'].describe())
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
print(df['voltage'].describe())
print(df.describe().T)
plt.figure(figsize=(8, 4))
sns.histplot(df['timestamp'].dropna(), kde=True)
plt.title('timestamp distribution')
plt.show()
sns.countplot(x='load_kw', data=df)
plt.show()
df = df.drop_duplicates()
df['temperature_c'] = df['temperature_c'].fillna(df['temperature_c'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['load_kw'])
X = df.drop(['load_kw'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=29)
print(X_train.shape, X_test.shape)
minmax0 = MinMaxScaler()
X_train = minmax0.fit_transform(X_train)
X_test = minmax0.transform(X_test)
model = KNeighborsRegressor(n_neighbors=5)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with energy_load')
