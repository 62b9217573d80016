# rent listings notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/rent_listings.csv')
print(df.groupby('monthly_rent')['sqft'].agg(['mean', 'count']).head(10))
print(df.groupby('monthly_rent')['neighborhood'].agg(['mean', 'count']).head(10))
print(df.shape)
plt.figure(figsize=(8, 4))
sns.histplot(df['sqft'].dropna(), kde=True)
plt.title('sqft distribution')
plt.show()
print(df['bedrooms'].describe())
print('lot_area unique:', df['lot_area'].nunique(), 'missing:', df['lot_area'].isnull().sum())
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
print(df['bathrooms'].describe())
print(df.describe().T)
print(df['lot_area'].describe())
sns.boxplot(x=df['monthly_rent'], y=df['city'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
print(df.dtypes)
print('city unique:', df['city'].nunique(), 'missing:', df['city'].isnull().sum())
print(df['sqft'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
print('garage_cars unique:', df['garage_cars'].nunique(), 'missing:', df['garage_cars'].isnull().sum())
print(df.columns.tolist())
print(df.groupby('monthly_rent')['year_built'].agg(['mean', 'count']).head(10))
print(df['neighborhood'].describe())
print(df['neighborhood'].value_counts())
sns.boxplot(x=df['monthly_rent'], y=df['lot_area'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
df = df.drop_duplicates()
df['city'] = df['city'].fillna(df['city'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['monthly_rent'])
X = df.drop(['monthly_rent'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=57)
print(X_train.shape, X_test.shape)
model = XGBRegressor(n_estimators=500, learning_rate=0.03)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with rent_listings')
