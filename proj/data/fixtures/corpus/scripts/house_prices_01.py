# house prices notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/house_prices/' + 'data.csv'
df = pd.read_csv(path)
print(df.isnull().sum().sort_values(ascending=False))
print('roof_style unique:', df['roof_style'].nunique(), 'missing:', df['roof_style'].isnull().sum())
print(df['year_built'].describe())
print(df.shape)
print(df['garage_cars'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['sqft'].dropna(), kde=True)
plt.title('sqft distribution')
plt.show()
print('year_built unique:', df['year_built'].nunique(), 'missing:', df['year_built'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
print(df['lot_area'].describe())
print(df['heating'].value_counts())
print(df.dtypes)
print(df['lot_area'].value_counts())
print('garage_cars unique:', df['garage_cars'].nunique(), 'missing:', df['garage_cars'].isnull().sum())
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
print('sqft unique:', df['sqft'].nunique(), 'missing:', df['sqft'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
print(df['year_built'].value_counts())
sns.boxplot(x=df['price'], y=df['year_built'])
plt.show()
print(df['city'].value_counts())
sns.boxplot(x=df['price'], y=df['sqft'])
plt.show()
df = df.drop_duplicates()
df['roof_style'] = df['roof_style'].fillna(df['roof_style'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=9)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = XGBRegressor(n_estimators=500, learning_rate=0.03)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with house_prices')
