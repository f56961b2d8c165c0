/// @file manufactured_sources.cpp
/// @brief Exact forcing terms for the manufactured-solution study.
///
/// Generated by tools/gen_manufactured.py — do not edit by hand.

#include "bivel/analysis/manufactured_sources.hpp"

#include <cmath>

namespace bivel::analysis {

double manufactured_source_nsf_baseline_density(double x, const double* c) {
  const double L = c[0];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double x0 = 2*M_PI/L;
  const double x1 = x*x0;
  const double x2 = rho_ph + x1;
  const double x3 = u_ph + x1;
  return rho0*x0*(rho_amp*(u0 + u_amp*sin(x3))*cos(x2) + u_amp*(rho_amp*sin(x2) + 1)*cos(x3));
}

double manufactured_source_nsf_baseline_momentum(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double x0 = 2*M_PI*x/L;
  const double x1 = u_ph + x0;
  const double x2 = u_amp*sin(x1);
  const double x3 = u0 + x2;
  const double x4 = rho_ph + x0;
  const double x5 = L*rho0;
  const double x6 = 3*x5;
  const double x7 = rho_amp*x6*cos(x4);
  const double x8 = rho_amp*sin(x4) + 1;
  const double x9 = T_ph + x0;
  const double x10 = R*T0;
  return (2.0/3.0)*M_PI*(T_amp*x10*x6*x8*cos(x9) + 8*M_PI*mu*x2 + 6*u_amp*x3*x5*x8*cos(x1) + x10*x7*(T_amp*sin(x9) + 1) + pow(x3, 2)*x7)/pow(L, 2);
}

double manufactured_source_nsf_baseline_energy(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_h = c[5];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double x0 = 2*M_PI*x/L;
  const double x1 = T_ph + x0;
  const double x2 = T_amp*sin(x1);
  const double x3 = u_ph + x0;
  const double x4 = u_amp*cos(x3);
  const double x5 = 8*M_PI*mu;
  const double x6 = 3*R*T0;
  const double x7 = x6*(x2 + 1);
  const double x8 = rho_ph + x0;
  const double x9 = L*rho0;
  const double x10 = x9*(rho_amp*sin(x8) + 1);
  const double x11 = u_amp*sin(x3);
  const double x12 = u0 + x11;
  const double x13 = pow(x12, 2) + x7;
  const double x14 = 3*x12;
  const double x15 = rho_amp*x9*cos(x8);
  const double x16 = T_amp*x6*cos(x1);
  const double x17 = 2*x12;
  return (1.0/3.0)*M_PI*(12*M_PI*T0*kappa_h*x2 + 3*x10*x13*x4 + x10*x14*(x16 + x17*x4) + x13*x14*x15 + x17*(x10*x16 + x11*x5 + x15*x7) + 2*x4*(x10*x7 - x4*x5))/pow(L, 2);
}

double manufactured_source_bivelocity_reduced_density(double x, const double* c) {
  const double L = c[0];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double x0 = 2*M_PI/L;
  const double x1 = x*x0;
  const double x2 = rho_ph + x1;
  const double x3 = u_ph + x1;
  return rho0*x0*(rho_amp*(u0 + u_amp*sin(x3))*cos(x2) + u_amp*(rho_amp*sin(x2) + 1)*cos(x3));
}

double manufactured_source_bivelocity_reduced_momentum(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_m = c[4];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double x0 = 2*M_PI*x/L;
  const double x1 = rho_ph + x0;
  const double x2 = rho_amp*sin(x1);
  const double x3 = x2 + 1;
  const double x4 = pow(x3, 3);
  const double x5 = u_ph + x0;
  const double x6 = u_amp*sin(x5);
  const double x7 = pow(x3, 4);
  const double x8 = T_ph + x0;
  const double x9 = pow(L, 2)*rho0;
  const double x10 = 3*x9;
  const double x11 = R*T0;
  const double x12 = u0 + x6;
  const double x13 = cos(x1);
  const double x14 = rho_amp*x13;
  const double x15 = x10*x14*x4;
  return (2.0/3.0)*M_PI*(8*M_PI*L*mu*x4*x6 + T_amp*x10*x11*x7*cos(x8) - 16*pow(M_PI, 2)*kappa_m*mu*x14*(2*pow(rho_amp, 2)*pow(x13, 2) + 3*x2*x3 - pow(x3, 2)) + 6*u_amp*x12*x7*x9*cos(x5) + x11*x15*(T_amp*sin(x8) + 1) + pow(x12, 2)*x15)/(pow(L, 3)*x4);
}

double manufactured_source_bivelocity_reduced_energy(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_m = c[4];
  const double kappa_h = c[5];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double x0 = 2*M_PI;
  const double x1 = x*x0/L;
  const double x2 = rho_ph + x1;
  const double x3 = sin(x2);
  const double x4 = rho_amp*x3;
  const double x5 = x4 + 1;
  const double x6 = pow(x5, 4);
  const double x7 = pow(L, 2);
  const double x8 = T_ph + x1;
  const double x9 = T_amp*sin(x8);
  const double x10 = u_ph + x1;
  const double x11 = u_amp*sin(x10);
  const double x12 = u0 + x11;
  const double x13 = x9 + 1;
  const double x14 = 3*R*T0;
  const double x15 = x13*x14;
  const double x16 = pow(x12, 2) + x15;
  const double x17 = cos(x10);
  const double x18 = u_amp*x17;
  const double x19 = pow(L, 3);
  const double x20 = 3*rho0*x19*pow(x5, 5);
  const double x21 = T_amp*x14*cos(x8);
  const double x22 = cos(x2);
  const double x23 = rho_amp*x22;
  const double x24 = pow(x22, 2);
  const double x25 = 2*pow(rho_amp, 2)*x24;
  const double x26 = x4*x5;
  const double x27 = kappa_m*x0;
  const double x28 = pow(x5, 2);
  const double x29 = 8*M_PI*mu;
  const double x30 = pow(x5, 3);
  const double x31 = 16*pow(M_PI, 2)*kappa_m*mu;
  const double x32 = L*x5;
  const double x33 = rho0*x7;
  return (1.0/3.0)*M_PI*(12*M_PI*T0*kappa_h*x6*x7*x9 + 3*rho0*x12*x16*x19*x23*x6 + x12*x20*(2*x12*x18 + x21) + x16*x18*x20 + 2*(u0*x32 + x11*x32 + x23*x27)*(L*x11*x29*x30 + x15*x23*x30*x33 + x21*x33*x6 - x23*x31*(x25 + 3*x26 - x28)) + 2*(L*u_amp*x17*x28 - M_PI*kappa_m*x25 - x26*x27)*(-L*x18*x28*x29 + 3*R*T0*rho0*x13*x30*x7 - rho_amp*x31*(-rho_amp*x24 - x3*x5)))/(pow(L, 4)*x6);
}

double manufactured_source_klimontovich_density(double x, const double* c) {
  const double L = c[0];
  const double kappa_klim = c[6];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double x0 = 2*M_PI;
  const double x1 = x*x0/L;
  const double x2 = rho_ph + x1;
  const double x3 = rho_amp*sin(x2);
  const double x4 = u_ph + x1;
  return rho0*x0*(L*rho_amp*(u0 + u_amp*sin(x4))*cos(x2) + L*u_amp*(x3 + 1)*cos(x4) + kappa_klim*x0*x3)/pow(L, 2);
}

double manufactured_source_klimontovich_momentum(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_klim = c[6];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double x0 = 2*M_PI*x/L;
  const double x1 = u_ph + x0;
  const double x2 = u_amp*sin(x1);
  const double x3 = u0 + x2;
  const double x4 = rho_ph + x0;
  const double x5 = cos(x4);
  const double x6 = 3*L*rho0;
  const double x7 = rho_amp*x5*x6;
  const double x8 = rho_amp*sin(x4);
  const double x9 = x8 + 1;
  const double x10 = T_ph + x0;
  const double x11 = R*T0;
  const double x12 = cos(x1);
  const double x13 = 6*rho0;
  return (2.0/3.0)*M_PI*(L*u_amp*x12*x13*x3*x9 + T_amp*x11*x6*x9*cos(x10) - M_PI*kappa_klim*x13*(2*rho_amp*u_amp*x12*x5 - x2*x9 - x3*x8) + 8*M_PI*mu*x2 + x11*x7*(T_amp*sin(x10) + 1) + pow(x3, 2)*x7)/pow(L, 2);
}

double manufactured_source_klimontovich_energy(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_h = c[5];
  const double kappa_klim = c[6];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double x0 = 2*M_PI*x/L;
  const double x1 = T_ph + x0;
  const double x2 = T_amp*sin(x1);
  const double x3 = u_ph + x0;
  const double x4 = cos(x3);
  const double x5 = u_amp*x4;
  const double x6 = 8*M_PI*mu;
  const double x7 = 3*R*T0;
  const double x8 = x7*(x2 + 1);
  const double x9 = rho_ph + x0;
  const double x10 = rho_amp*sin(x9);
  const double x11 = x10 + 1;
  const double x12 = L*rho0;
  const double x13 = x11*x12;
  const double x14 = u_amp*sin(x3);
  const double x15 = u0 + x14;
  const double x16 = pow(x15, 2) + x8;
  const double x17 = 3*x15;
  const double x18 = rho_amp*cos(x9);
  const double x19 = x12*x18;
  const double x20 = T_amp*x7*cos(x1);
  const double x21 = 2*x15;
  const double x22 = x20 + x21*x5;
  return (1.0/3.0)*M_PI*(12*M_PI*T0*kappa_h*x2 - 6*M_PI*kappa_klim*rho0*(-x10*x16 + x11*(2*pow(u_amp, 2)*pow(x4, 2) - x14*x21 - x2*x7) + 2*x18*x22) + 3*x13*x16*x5 + x13*x17*x22 + x16*x17*x19 + x21*(x13*x20 + x14*x6 + x19*x8) + 2*x5*(x13*x8 - x5*x6))/pow(L, 2);
}

double manufactured_source_volume_full_density(double x, const double* c) {
  const double L = c[0];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double x0 = 2*M_PI/L;
  const double x1 = x*x0;
  const double x2 = rho_ph + x1;
  const double x3 = u_ph + x1;
  return rho0*x0*(rho_amp*(u0 + u_amp*sin(x3))*cos(x2) + u_amp*(rho_amp*sin(x2) + 1)*cos(x3));
}

double manufactured_source_volume_full_momentum(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_m = c[4];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double vb_amp = c[13];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double vb_ph = c[17];
  const double x0 = 2*M_PI*x/L;
  const double x1 = vb_ph + x0;
  const double x2 = sin(x1);
  const double x3 = vb_amp*x2;
  const double x4 = x3 + 1;
  const double x5 = pow(x4, 3);
  const double x6 = cos(x1);
  const double x7 = rho_ph + x0;
  const double x8 = rho_amp*sin(x7) + 1;
  const double x9 = pow(M_PI, 2);
  const double x10 = pow(kappa_m, 2)*rho0*x9;
  const double x11 = 24*x10*x8;
  const double x12 = u_ph + x0;
  const double x13 = u_amp*sin(x12);
  const double x14 = u0 + x13;
  const double x15 = rho_amp*cos(x7);
  const double x16 = pow(L, 2);
  const double x17 = rho0*x16;
  const double x18 = x17*x5;
  const double x19 = pow(x6, 2);
  const double x20 = pow(vb_amp, 2);
  const double x21 = x19*x20;
  const double x22 = x2*x4;
  const double x23 = u_amp*cos(x12);
  const double x24 = pow(x4, 2);
  const double x25 = 8*M_PI*L*mu;
  const double x26 = T_ph + x0;
  const double x27 = T_amp*sin(x26) + 1;
  const double x28 = 16*kappa_m*mu*x9;
  const double x29 = 3*R*T0*rho0*x16*x27*x4 - vb_amp*x28*(vb_amp*x19 + x22) - x23*x24*x25;
  const double x30 = x4*x8;
  const double x31 = vb_amp*x6;
  const double x32 = R*T0*x17;
  const double x33 = 3*x4;
  return (2.0/3.0)*M_PI*(pow(vb_amp, 3)*x11*pow(x6, 3) - 12*x10*x15*x21*x4 + x11*x20*x22*x6 + 3*pow(x14, 2)*x15*x18 + 6*x14*x18*x23*x8 + x15*x24*x29 + x29*x30*x31 + x30*(3*T_amp*x24*x32*cos(x26) + x13*x25*x5 - x27*x31*x32*x33 - x28*x31*(-2*x21 + x24 - x3*x33)))/(pow(L, 3)*x5);
}

double manufactured_source_volume_full_energy(double x, const double* c) {
  const double L = c[0];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_m = c[4];
  const double kappa_h = c[5];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double vb_amp = c[13];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double vb_ph = c[17];
  const double x0 = 2*M_PI;
  const double x1 = x*x0/L;
  const double x2 = vb_ph + x1;
  const double x3 = sin(x2);
  const double x4 = vb_amp*x3;
  const double x5 = x4 + 1;
  const double x6 = pow(x5, 4);
  const double x7 = rho_ph + x1;
  const double x8 = rho_amp*cos(x7);
  const double x9 = T_ph + x1;
  const double x10 = T_amp*cos(x9);
  const double x11 = pow(L, 2);
  const double x12 = 12*M_PI*T0*kappa_h*x11;
  const double x13 = x12*pow(x5, 5);
  const double x14 = rho_amp*sin(x7) + 1;
  const double x15 = T_amp*sin(x9);
  const double x16 = cos(x2);
  const double x17 = vb_amp*x16;
  const double x18 = x14*x17;
  const double x19 = pow(x16, 2);
  const double x20 = pow(vb_amp, 2);
  const double x21 = x19*x20;
  const double x22 = pow(M_PI, 2);
  const double x23 = pow(kappa_m, 2)*x22;
  const double x24 = x21*x23;
  const double x25 = u_ph + x1;
  const double x26 = u_amp*sin(x25);
  const double x27 = u0 + x26;
  const double x28 = pow(x5, 2);
  const double x29 = x11*x28;
  const double x30 = x15 + 1;
  const double x31 = 3*R*T0;
  const double x32 = x30*x31;
  const double x33 = -4*x24 + pow(x27, 2)*x29 + x29*x32;
  const double x34 = x28*x8;
  const double x35 = 3*x27;
  const double x36 = u_amp*cos(x25);
  const double x37 = L*x28*x36;
  const double x38 = rho0*x14;
  const double x39 = 8*x23;
  const double x40 = pow(vb_amp, 3)*pow(x16, 3);
  const double x41 = pow(x5, 3);
  const double x42 = x11*x41;
  const double x43 = x10*x31;
  const double x44 = x3*x5;
  const double x45 = x16*x20*x44;
  const double x46 = L*x5;
  const double x47 = 2*x21;
  const double x48 = x4*x5;
  const double x49 = kappa_m*x0;
  const double x50 = 12*rho0*x24;
  const double x51 = 8*M_PI*mu;
  const double x52 = 16*kappa_m*mu*x22;
  const double x53 = 3*R*T0*rho0*x11*x30*x5 - vb_amp*x52*(vb_amp*x19 + x44) - x37*x51;
  const double x54 = 24*x23*x38;
  return (1.0/3.0)*M_PI*(L*rho0*x33*x34*x35 - x10*x12*x18*x6 - x10*x13*x8 + x13*x14*x15 + 2*x14*(x5*x53 - x50)*(M_PI*kappa_m*x47 + x37 + x48*x49) + 3*x33*x37*x38 + x35*x38*x46*(2*x27*x36*x42 + x39*x40 + x39*x45 + x42*x43) + 2*(u0*x46 - x17*x49 + x26*x46)*(x14*x5*(L*x26*x41*x51 - rho0*x11*x17*x32*x5 + rho0*x29*x43 - x17*x52*(x28 - x47 - 3*x48)) + x18*x5*x53 + x34*x53 + x40*x54 + x45*x54 - x5*x50*x8))/(pow(L, 4)*x6);
}

double manufactured_source_volume_full_v_bar(double x, const double* c) {
  const double L = c[0];
  const double M = c[1];
  const double R = c[2];
  const double mu = c[3];
  const double kappa_m = c[4];
  const double rho0 = c[7];
  const double u0 = c[8];
  const double T0 = c[9];
  const double rho_amp = c[10];
  const double u_amp = c[11];
  const double T_amp = c[12];
  const double vb_amp = c[13];
  const double rho_ph = c[14];
  const double u_ph = c[15];
  const double T_ph = c[16];
  const double vb_ph = c[17];
  const double x0 = 2*M_PI;
  const double x1 = x*x0/L;
  const double x2 = T_ph + x1;
  const double x3 = T_amp*sin(x2) + 1;
  const double x4 = rho_ph + x1;
  const double x5 = rho_amp*sin(x4) + 1;
  const double x6 = vb_ph + x1;
  const double x7 = sin(x6);
  const double x8 = vb_amp*x7;
  const double x9 = x8 + 1;
  const double x10 = pow(x9, 3);
  const double x11 = u_ph + x1;
  const double x12 = u_amp*sin(x11);
  const double x13 = cos(x6);
  const double x14 = 3*rho0;
  const double x15 = x13*x14;
  const double x16 = x10*x5;
  const double x17 = cos(x4);
  const double x18 = rho_amp*x17;
  const double x19 = x13*x18;
  const double x20 = pow(L, 2)*R*T0;
  const double x21 = x20*x3;
  const double x22 = x10*x21;
  const double x23 = x22*(-x19 + x5*x7);
  const double x24 = 6*M_PI*kappa_m*rho0;
  const double x25 = pow(x9, 2);
  const double x26 = L*u_amp*cos(x11);
  const double x27 = x25*x26;
  const double x28 = pow(x13, 2);
  const double x29 = vb_amp*x28;
  const double x30 = x29*x5;
  const double x31 = pow(M_PI, 2);
  const double x32 = x7*x9;
  const double x33 = x29 + x32;
  const double x34 = 8*x5;
  const double x35 = M_PI*mu;
  const double x36 = x34*x35;
  const double x37 = pow(kappa_m, 2);
  const double x38 = pow(vb_amp, 2);
  const double x39 = x14*(-x21*x25 + 4*x28*x31*x37*x38);
  const double x40 = kappa_m*x0;
  const double x41 = vb_amp*x40;
  const double x42 = 8*x25*x35*(-x27 - x33*x41);
  const double x43 = x31*x34*x37;
  return (2.0/3.0)*M_PI*M*vb_amp*(pow(L, 3)*R*T0*x15*x16*x3*(u0 + x12) + x23*x24 - x40*(-16*kappa_m*mu*vb_amp*x31*pow(x33, 2)*x5*x9 - x10*x26*x33*x36 + x13*x36*x9*(L*x10*x12 - x13*x41*(x25 - 2*x28*x38 - 3*x8*x9)) + x14*x23 - x15*(-T_amp*x16*x20*cos(x2) + 4*rho_amp*x17*x28*x31*x37*x38*x9 - pow(vb_amp, 3)*pow(x13, 3)*x43 - x13*x32*x38*x43 - x18*x22) + x19*x42 + x24*x27*x30 + x30*x39 + x32*x39*x5 - x42*x5*x7))/(pow(L, 4)*R*T0*pow(rho0, 2)*x10*x3*x5);
}

}  // namespace bivel::analysis
