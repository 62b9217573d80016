# energy load notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.linear_model import Lasso
from sklearn.preprocessing import PolynomialFeatures, StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/energy_load.csv')
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
print(df.groupby('load_kw')['temperature_c'].agg(['mean', 'count']).head(10))
print(df.groupby('load_kw')['vibration_rms'].agg(['mean', 'count']).head(10))
print(df.groupby('load_kw')['humidity_pct'].agg(['mean', 'count']).head(10))
sns.boxplot(x=df['load_kw'], y=df['timestamp'])
plt.show()
sns.boxplot(x=df['load_kw'], y=df['vibration_rms'])
plt.show()
print(df.info())
print('vibration_rms unique:', df['vibration_rms'].nunique(), 'missing:', df['vibration_rms'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['voltage'].dropna(), kde=True)
plt.title('voltage distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['status'].dropna(), kde=True)
plt.title('status distribution')
plt.show()
print('device_id unique:', df['device_id'].nunique(), 'missing:', df['device_id'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['device_id'].dropna(), kde=True)
plt.title('device_id distribution')
plt.show()
print(df['device_id'].value_counts())
print('status unique:', df['status'].nunique(), 'missing:', df['status'].isnull().sum())
df = df.drop_duplicates()
df['vibration_rms'] = df['vibration_rms'].fillna(df['vibration_rms'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['load_kw'])
X = df.drop(['load_kw'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=63)
print(X_train.shape, X_test.shape)
standa0 = StandardScaler()
X_train = standa0.fit_transform(X_train)
X_test = standa0.transform(X_test)
polyno1 = PolynomialFeatures(degree=2)
X_train = polyno1.fit_transform(X_train)
X_test = polyno1.transform(X_test)
model = Lasso(alpha=0.001)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with energy_load')
