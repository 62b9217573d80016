# house prices notebook 7
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from sklearn.linear_model import Lasso
from sklearn.preprocessing import StandardScaler
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/house_prices.csv')
print(df.groupby('price')['garage_cars'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
sns.boxplot(x=df['price'], y=df['sqft'])
plt.show()
print(df['city'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['garage_cars'].dropna(), kde=True)
plt.title('garage_cars distribution')
plt.show()
print(df.groupby('price')['lot_area'].agg(['mean', 'count']).head(10))
print(df['year_built'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['year_built'].dropna(), kde=True)
plt.title('year_built distribution')
plt.show()
print(df.groupby('price')['sqft'].agg(['mean', 'count']).head(10))
print(df['heating'].describe())
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
print(df['bedrooms'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
print(df['roof_style'].value_counts())
print(df.groupby('price')['year_built'].agg(['mean', 'count']).head(10))
print(df['bathrooms'].describe())
print(df['roof_style'].describe())
print('sqft unique:', df['sqft'].nunique(), 'missing:', df['sqft'].isnull().sum())
print(df.shape)
print(df.groupby('price')['heating'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
df = df.drop_duplicates()
df['sqft'] = df['sqft'].fillna(df['sqft'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=79)
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
simple_b0 = SimpleImputer(strategy='median')
X_train_b = simple_b0.fit_transform(X_train)
X_test_b = simple_b0.transform(X_test)
standa_b1 = StandardScaler()
X_train_b = standa_b1.fit_transform(X_train_b)
X_test_b = standa_b1.transform(X_test_b)
model_b = Lasso(alpha=0.001)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('rmse', np.sqrt(mean_squared_error(y_test, pred_b)))
print('r2', r2_score(y_test, pred_b))
plt.scatter(y_test, pred_b, alpha=0.4)
plt.show()
print('done with house_prices')
