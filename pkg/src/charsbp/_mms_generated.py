"""Generated by scripts/derive_mms.py; do not edit."""
import numpy as np

K = 0.42231879825151819660

def u_in(x1, x2, t):
    return np.e*x2*(2 - np.exp(-x1**2 - x2**2))*np.sin(t)/(1 + 2*np.e) + 0 * x1

def ut_in(x1, x2, t):
    return np.e*x2*(2 - np.exp(-x1**2 - x2**2))*np.cos(t)/(1 + 2*np.e) + 0 * x1

def ux1_in(x1, x2, t):
    return 2*np.e*x1*x2*np.exp(-x1**2 - x2**2)*np.sin(t)/(1 + 2*np.e) + 0 * x1

def ux2_in(x1, x2, t):
    return 2*np.e*x2**2*np.exp(-x1**2 - x2**2)*np.sin(t)/(1 + 2*np.e) + np.e*(2 - np.exp(-x1**2 - x2**2))*np.sin(t)/(1 + 2*np.e) + 0 * x1

def f_in(x1, x2, t):
    return 4*np.e*x1**2*x2*np.exp(-x1**2 - x2**2)*np.sin(t)/(1 + 2*np.e) + 4*np.e*x2**3*np.exp(-x1**2 - x2**2)*np.sin(t)/(1 + 2*np.e) + np.e*x2*(-2 + np.exp(-(x1**2 + x2**2)))*np.sin(t)/(1 + 2*np.e) - 8*np.e*x2*np.exp(-x1**2 - x2**2)*np.sin(t)/(1 + 2*np.e) + 0 * x1

def fs_in(x1, x2, t):
    return x2*(4*x1**2 + 4*x2**2 - 2*np.exp(x1**2 + x2**2) - 7)*np.exp(-x1**2 - x2**2 + 1)/(1 + 2*np.e) + 0 * x1

def us_in(x1, x2, t):
    return x2*(2*np.exp(x1**2 + x2**2) - 1)*np.exp(-x1**2 - x2**2 + 1)/(1 + 2*np.e) + 0 * x1

def u_out(x1, x2, t):
    return (x1*(np.sqrt(x1**2 + x2**2) - 1)**2/np.sqrt(x1**2 + x2**2) + x2*(np.sqrt(x1**2 + x2**2) - 1)/np.sqrt(x1**2 + x2**2))*np.sin(t) + 0 * x1

def ut_out(x1, x2, t):
    return (x1*(np.sqrt(x1**2 + x2**2) - 1)**2/np.sqrt(x1**2 + x2**2) + x2*(np.sqrt(x1**2 + x2**2) - 1)/np.sqrt(x1**2 + x2**2))*np.cos(t) + 0 * x1

def ux1_out(x1, x2, t):
    return (2*x1**2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2) - x1**2*(np.sqrt(x1**2 + x2**2) - 1)**2/(x1**2 + x2**2)**(3/2) + x1*x2/(x1**2 + x2**2) - x1*x2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**(3/2) + (np.sqrt(x1**2 + x2**2) - 1)**2/np.sqrt(x1**2 + x2**2))*np.sin(t) + 0 * x1

def ux2_out(x1, x2, t):
    return (2*x1*x2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2) - x1*x2*(np.sqrt(x1**2 + x2**2) - 1)**2/(x1**2 + x2**2)**(3/2) + x2**2/(x1**2 + x2**2) - x2**2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**(3/2) + (np.sqrt(x1**2 + x2**2) - 1)/np.sqrt(x1**2 + x2**2))*np.sin(t) + 0 * x1

def f_out(x1, x2, t):
    return -(-6*x1**3*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**2 + 2*x1**3/(x1**2 + x2**2)**(3/2) + 3*x1**3*(np.sqrt(x1**2 + x2**2) - 1)**2/(x1**2 + x2**2)**(5/2) - 3*x1**2*x2/(x1**2 + x2**2)**2 + 3*x1**2*x2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**(5/2) + 6*x1*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2) - 3*x1*(np.sqrt(x1**2 + x2**2) - 1)**2/(x1**2 + x2**2)**(3/2) + x2/(x1**2 + x2**2) - x2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**(3/2))*np.sin(t) - (-6*x1*x2**2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**2 + 2*x1*x2**2/(x1**2 + x2**2)**(3/2) + 3*x1*x2**2*(np.sqrt(x1**2 + x2**2) - 1)**2/(x1**2 + x2**2)**(5/2) + 2*x1*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2) - x1*(np.sqrt(x1**2 + x2**2) - 1)**2/(x1**2 + x2**2)**(3/2) - 3*x2**3/(x1**2 + x2**2)**2 + 3*x2**3*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**(5/2) + 3*x2/(x1**2 + x2**2) - 3*x2*(np.sqrt(x1**2 + x2**2) - 1)/(x1**2 + x2**2)**(3/2))*np.sin(t) - (x1*(np.sqrt(x1**2 + x2**2) - 1) + x2)*(np.sqrt(x1**2 + x2**2) - 1)*np.sin(t)/np.sqrt(x1**2 + x2**2) + 0 * x1

def fs_out(x1, x2, t):
    return (-x1**5 - 2*x1**3*x2**2 + 2*x1**3*np.sqrt(x1**2 + x2**2) - 4*x1**3 - x1**2*x2*np.sqrt(x1**2 + x2**2) + x1**2*x2 - x1*x2**4 + 2*x1*x2**2*np.sqrt(x1**2 + x2**2) - 4*x1*x2**2 + x1 - x2**3*np.sqrt(x1**2 + x2**2) + x2**3 - x2)/(x1**2 + x2**2)**(3/2) + 0 * x1

def us_out(x1, x2, t):
    return (x1*(np.sqrt(x1**2 + x2**2) - 1) + x2)*(np.sqrt(x1**2 + x2**2) - 1)/np.sqrt(x1**2 + x2**2) + 0 * x1
