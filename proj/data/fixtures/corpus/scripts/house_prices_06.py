# house prices notebook 6
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.impute import SimpleImputer
from sklearn.linear_model import Lasso
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/house_prices.csv')
print(df['neighborhood'].describe())
print(df['garage_cars'].value_counts())
print(df.groupby('price')['neighborhood'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
print(df['garage_cars'].describe())
sns.countplot(x='price', data=df)
plt.show()
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
print(df.shape)
print(df.info())
print(df.groupby('price')['heating'].agg(['mean', 'count']).head(10))
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
print(df['heating'].describe())
sns.boxplot(x=df['price'], y=df['heating'])
plt.show()
print(df.columns.tolist())
print('garage_cars unique:', df['garage_cars'].nunique(), 'missing:', df['garage_cars'].isnull().sum())
print(df['neighborhood'].value_counts())
sns.boxplot(x=df['price'], y=df['bedrooms'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
df = df.drop_duplicates()
df['garage_cars'] = df['garage_cars'].fillna(df['garage_cars'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=83)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
standa1 = StandardScaler()
X_train = standa1.fit_transform(X_train)
X_test = standa1.transform(X_test)
model = Lasso(alpha=0.001)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with house_prices')
