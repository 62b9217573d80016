# energy load notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestRegressor
from sklearn.neighbors import KNeighborsRegressor
from sklearn.preprocessing import MinMaxScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/energy_load.csv')
print(df.groupby('load_kw')['humidity_pct'].agg(['mean', 'count']).head(10))
print(df['pressure_hpa'].value_counts())
print(df.groupby('load_kw')['timestamp'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
print(df.describe().T)
print('timestamp unique:', df['timestamp'].nunique(), 'missing:', df['timestamp'].isnull().sum())
print(df.info())
plt.figure(figsize=(8, 4))
sns.histplot(df['pressure_hpa'].dropna(), kde=True)
plt.title('pressure_hpa distribution')
plt.show()
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
sns.boxplot(x=df['load_kw'], y=df['vibration_rms'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['status'].dropna(), kde=True)
plt.title('status distribution')
plt.show()
print(df['vibration_rms'].value_counts())
print('device_id unique:', df['device_id'].nunique(), 'missing:', df['device_id'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
print('status unique:', df['status'].nunique(), 'missing:', df['status'].isnull().sum())
print(df.groupby('load_kw')['status'].agg(['mean', 'count']).head(10))
print(df['device_id'].value_counts())
print(df.groupby('load_kw')['vibration_rms'].agg(['mean', 'count']).head(10))
print('voltage unique:', df['voltage'].nunique(), 'missing:', df['voltage'].isnull().sum())
sns.boxplot(x=df['load_kw'], y=df['voltage'])
plt.show()
print(df['timestamp'].describe())
print(df['humidity_pct'].value_counts())
print(df.shape)
print(df.head())
print(df['device_id'].describe())
df = df.drop_duplicates()
df['temperature_c'] = df['temperature_c'].fillna(df['temperature_c'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['load_kw'])
X = df.drop(['load_kw'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=44)
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
model_b = RandomForestRegressor(n_estimators=300, random_state=0)
model_b.fit(X_train, y_train)
pred_b = model_b.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred_b)))
print('r2', r2_score(y_test, pred_b))
plt.scatter(y_test, pred_b, alpha=0.4)
plt.show()
print('done with energy_load')
