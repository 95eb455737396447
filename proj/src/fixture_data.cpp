#include "datamix/pile.hpp"

namespace datamix::detail {

// 64 pre-training runs at the 1B scale: per-model domain weights and
// task scores, stored as the published decimals.
const char* const kResultTableCsv =
    "model_id,pile_cc,pubmed_central,arxiv,github,freelaw,stack_exchange,uspto_backgrounds,pubmed_abstracts,gutenberg_pg_19,wikipedia_en,dm_mathematics,ubuntu_irc,europarl,hackernews,philpapers,nih_exporter,enron_emails,social_iqa,hellaswag,piqa,openbookqa,lambada,sciq,copa,race,arc_easy,logiqa,qqp,winogrande,multirc\n"
    "1,0.27,0.126,0.123,0.034,0.065,0.039,0.307,0.0,0.0,0.036,0.0,0.0,0.0,0.0,0.0,0.0,0.0,33.27,40.58,67.29,28.63,29.17,80.68,70.5,29.47,50.03,23.76,55.71,51.54,52.65\n"
    "2,0.101,0.211,0.066,0.153,0.071,0.097,0.106,0.136,0.0,0.013,0.0,0.0,0.0,0.011,0.033,0.0,0.0,33.33,36.86,65.14,27.87,26.86,79.98,63.83,30.0,48.72,24.17,55.9,51.59,53.39\n"
    "3,0.381,0.177,0.055,0.095,0.052,0.18,0.003,0.0,0.016,0.02,0.011,0.001,0.0,0.005,0.0,0.004,0.0,33.62,40.58,67.97,29.33,31.55,81.05,69.17,32.11,50.01,25.29,54.84,51.39,51.89\n"
    "4,0.192,0.174,0.059,0.194,0.083,0.0,0.0,0.005,0.0,0.177,0.0,0.005,0.109,0.0,0.0,0.0,0.0,33.53,36.06,64.66,29.1,27.11,80.8,65.0,28.82,46.64,25.29,56.52,50.91,50.92\n"
    "5,0.359,0.243,0.201,0.017,0.004,0.103,0.002,0.014,0.002,0.01,0.03,0.0,0.0,0.0,0.0,0.014,0.0,33.49,40.07,67.03,29.23,29.16,82.4,67.5,31.13,51.06,24.55,54.01,53.13,49.03\n"
    "6,0.209,0.153,0.036,0.205,0.212,0.075,0.055,0.002,0.0,0.005,0.047,0.0,0.001,0.0,0.0,0.0,0.0,33.56,37.85,65.36,28.33,28.92,79.88,66.0,30.06,47.46,25.96,56.34,52.26,53.09\n"
    "7,0.232,0.089,0.042,0.028,0.113,0.011,0.011,0.011,0.217,0.022,0.007,0.08,0.117,0.018,0.0,0.0,0.0,33.62,37.93,66.0,29.13,31.53,78.67,66.67,29.9,46.75,25.45,52.35,51.26,53.64\n"
    "8,0.288,0.123,0.126,0.008,0.21,0.129,0.0,0.016,0.035,0.055,0.008,0.0,0.0,0.0,0.0,0.0,0.0,33.55,39.59,66.55,28.73,30.92,79.7,68.67,30.75,48.39,26.32,54.2,51.45,50.23\n"
    "9,0.341,0.094,0.184,0.106,0.009,0.142,0.075,0.005,0.0,0.035,0.007,0.0,0.0,0.002,0.0,0.0,0.0,33.43,40.05,66.6,28.87,31.39,81.1,67.0,30.57,50.66,23.6,54.89,50.83,54.18\n"
    "10,0.114,0.261,0.226,0.189,0.046,0.077,0.033,0.039,0.01,0.001,0.001,0.003,0.0,0.0,0.0,0.0,0.0,33.21,35.89,64.74,26.6,27.37,79.12,64.5,29.63,47.74,25.65,54.79,51.84,54.48\n"
    "11,0.273,0.157,0.107,0.024,0.276,0.051,0.056,0.009,0.001,0.009,0.0,0.0,0.003,0.034,0.0,0.0,0.0,33.31,39.55,66.29,29.33,30.32,79.97,66.83,30.49,47.47,26.37,54.2,51.05,50.17\n"
    "12,0.354,0.184,0.139,0.055,0.048,0.109,0.0,0.075,0.0,0.032,0.001,0.0,0.003,0.0,0.0,0.0,0.0,33.17,39.89,66.27,28.73,30.31,82.85,69.5,30.85,50.18,23.81,55.23,51.83,52.12\n"
    "13,0.283,0.119,0.101,0.078,0.047,0.002,0.057,0.061,0.051,0.049,0.092,0.057,0.0,0.0,0.0,0.001,0.0,33.28,38.63,66.9,29.4,31.38,79.42,67.33,30.35,49.92,25.58,53.69,52.12,51.42\n"
    "14,0.055,0.501,0.099,0.017,0.002,0.065,0.088,0.007,0.091,0.003,0.0,0.0,0.006,0.0,0.043,0.022,0.0,32.43,36.18,64.05,27.87,26.25,81.4,65.83,28.66,49.52,26.29,57.09,52.0,52.69\n"
    "15,0.339,0.101,0.251,0.048,0.024,0.007,0.024,0.0,0.0,0.17,0.0,0.017,0.0,0.0,0.019,0.0,0.0,33.57,39.52,66.7,29.67,29.86,81.38,69.5,31.21,50.73,25.86,53.95,51.01,51.87\n"
    "16,0.111,0.196,0.147,0.237,0.046,0.06,0.032,0.01,0.012,0.14,0.008,0.0,0.0,0.001,0.0,0.0,0.0,33.7,35.94,64.51,27.83,26.95,81.23,66.33,29.57,48.65,25.12,54.24,51.82,53.48\n"
    "17,0.244,0.204,0.228,0.02,0.016,0.002,0.026,0.196,0.0,0.02,0.036,0.0,0.004,0.0,0.004,0.0,0.0,33.89,38.68,66.83,28.13,28.78,79.6,65.17,28.74,48.86,25.91,53.35,52.54,51.49\n"
    "18,0.361,0.084,0.0,0.012,0.019,0.052,0.007,0.001,0.001,0.159,0.009,0.296,0.0,0.0,0.0,0.0,0.0,33.31,39.9,67.39,30.67,28.56,78.83,68.17,30.03,49.42,26.34,53.18,51.17,52.45\n"
    "19,0.061,0.156,0.501,0.022,0.005,0.062,0.002,0.0,0.002,0.17,0.0,0.002,0.0,0.0,0.017,0.0,0.0,33.53,34.67,63.33,28.03,24.13,77.42,65.33,29.76,47.9,26.24,50.61,52.01,55.4\n"
    "20,0.154,0.272,0.101,0.124,0.03,0.113,0.02,0.011,0.054,0.021,0.099,0.0,0.001,0.0,0.0,0.0,0.0,33.38,37.12,64.83,29.4,29.41,78.98,67.33,29.49,48.3,25.76,51.49,51.09,54.87\n"
    "21,0.19,0.163,0.047,0.137,0.014,0.173,0.001,0.008,0.001,0.218,0.0,0.029,0.007,0.011,0.0,0.0,0.0,33.75,37.44,65.0,27.67,27.67,78.95,67.67,30.77,47.88,26.11,54.27,52.13,51.73\n"
    "22,0.057,0.053,0.031,0.066,0.073,0.12,0.001,0.351,0.089,0.129,0.0,0.001,0.0,0.031,0.0,0.0,0.0,33.24,36.07,63.68,27.77,28.03,78.72,62.67,29.76,46.68,26.24,54.99,52.03,49.49\n"
    "23,0.499,0.302,0.078,0.04,0.024,0.007,0.021,0.0,0.002,0.027,0.0,0.0,0.0,0.0,0.0,0.0,0.0,33.56,42.15,67.8,29.37,33.47,81.83,69.83,31.21,50.92,24.17,52.77,52.5,50.61\n"
    "24,0.023,0.126,0.068,0.195,0.181,0.24,0.036,0.059,0.0,0.07,0.001,0.0,0.0,0.0,0.0,0.0,0.0,33.71,34.67,62.99,25.83,24.04,79.12,65.83,27.91,45.24,25.91,55.19,50.28,50.29\n"
    "25,0.088,0.135,0.074,0.121,0.214,0.024,0.189,0.132,0.001,0.011,0.0,0.001,0.0,0.004,0.006,0.0,0.0,33.51,36.75,64.09,29.47,26.69,80.03,67.67,30.05,47.5,27.24,49.68,51.68,51.24\n"
    "26,0.138,0.214,0.076,0.127,0.085,0.204,0.001,0.001,0.147,0.005,0.0,0.002,0.0,0.0,0.0,0.0,0.0,33.4,36.97,64.74,28.7,33.0,79.17,65.5,30.19,46.9,25.55,55.43,52.12,51.91\n"
    "27,0.302,0.049,0.05,0.042,0.039,0.146,0.255,0.01,0.01,0.068,0.019,0.0,0.008,0.0,0.0,0.0,0.0,33.59,40.81,67.97,29.57,31.6,80.12,69.0,30.96,50.26,25.86,50.94,51.93,50.33\n"
    "28,0.214,0.221,0.067,0.101,0.052,0.001,0.0,0.002,0.265,0.052,0.0,0.026,0.0,0.0,0.0,0.0,0.0,33.52,38.25,66.15,29.77,33.08,80.22,65.67,30.37,48.57,24.37,50.91,51.5,52.42\n"
    "29,0.383,0.064,0.244,0.073,0.023,0.02,0.007,0.007,0.017,0.151,0.0,0.01,0.0,0.0,0.0,0.0,0.0,33.53,40.28,66.88,29.5,31.49,81.92,68.33,30.08,50.55,25.32,51.99,52.32,52.52\n"
    "30,0.12,0.175,0.073,0.1,0.087,0.054,0.002,0.053,0.0,0.017,0.101,0.134,0.037,0.0,0.019,0.026,0.0,33.49,35.71,63.84,29.13,27.69,78.23,63.33,29.62,46.96,25.12,53.53,51.67,54.04\n"
    "31,0.134,0.086,0.234,0.04,0.015,0.022,0.134,0.022,0.0,0.287,0.026,0.0,0.0,0.0,0.0,0.0,0.0,33.16,37.37,64.47,29.47,26.99,77.42,64.67,30.13,48.77,26.4,49.53,52.13,52.05\n"
    "32,0.182,0.255,0.08,0.171,0.134,0.015,0.008,0.016,0.045,0.058,0.037,0.0,0.0,0.0,0.0,0.0,0.0,33.56,37.39,65.05,28.0,29.54,80.87,67.17,29.92,48.79,24.3,51.36,52.63,53.04\n"
    "33,0.167,0.407,0.105,0.017,0.007,0.126,0.008,0.047,0.009,0.045,0.054,0.0,0.007,0.0,0.0,0.0,0.0,33.48,38.0,65.3,29.43,26.59,79.82,64.33,30.03,48.86,25.91,56.06,50.92,53.09\n"
    "34,0.364,0.061,0.295,0.006,0.029,0.006,0.037,0.0,0.047,0.124,0.0,0.0,0.026,0.004,0.0,0.0,0.0,33.28,40.18,66.68,30.37,31.46,80.58,69.33,30.16,49.88,24.3,56.56,50.97,49.97\n"
    "35,0.618,0.065,0.142,0.006,0.122,0.001,0.025,0.0,0.014,0.0,0.001,0.001,0.0,0.0,0.003,0.001,0.0,33.35,43.37,69.04,30.43,31.71,82.13,67.0,32.47,52.22,23.35,52.57,52.39,52.18\n"
    "36,0.198,0.184,0.279,0.108,0.01,0.097,0.002,0.083,0.039,0.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0,33.29,37.69,66.46,27.63,30.21,80.83,67.83,30.49,48.32,24.96,56.7,52.7,49.05\n"
    "37,0.031,0.4,0.052,0.033,0.07,0.019,0.119,0.002,0.0,0.003,0.0,0.0,0.0,0.018,0.0,0.253,0.0,33.63,32.96,62.25,26.43,18.92,76.73,61.5,29.27,44.86,26.19,52.54,52.3,53.78\n"
    "38,0.006,0.331,0.251,0.13,0.007,0.021,0.014,0.005,0.001,0.107,0.0,0.12,0.0,0.0,0.0,0.007,0.0,33.61,32.98,60.17,26.83,20.29,77.9,62.67,28.12,45.54,27.68,48.04,51.68,52.27\n"
    "39,0.156,0.223,0.239,0.049,0.087,0.202,0.001,0.012,0.0,0.029,0.0,0.0,0.0,0.0,0.0,0.0,0.0,33.21,37.31,65.24,27.97,28.1,79.12,64.67,30.11,48.15,25.47,49.81,51.42,51.45\n"
    "40,0.181,0.039,0.157,0.057,0.062,0.174,0.095,0.016,0.015,0.096,0.007,0.0,0.089,0.012,0.0,0.0,0.0,33.61,37.79,65.32,28.7,28.58,79.6,66.0,30.21,48.86,25.37,57.12,52.8,55.68\n"
    "41,0.026,0.08,0.422,0.026,0.213,0.003,0.099,0.101,0.01,0.019,0.001,0.0,0.0,0.0,0.0,0.0,0.0,33.49,34.51,62.24,27.1,22.78,77.78,64.0,28.33,45.48,24.83,50.27,51.79,54.03\n"
    "42,0.2,0.07,0.466,0.044,0.075,0.078,0.031,0.028,0.0,0.006,0.0,0.0,0.0,0.0,0.0,0.0,0.0,33.43,37.59,65.58,28.77,26.99,80.25,66.33,28.82,48.64,24.96,54.73,51.63,53.96\n"
    "43,0.549,0.116,0.027,0.067,0.041,0.137,0.037,0.002,0.001,0.021,0.001,0.002,0.0,0.0,0.0,0.0,0.0,33.07,42.69,68.05,28.9,31.34,79.47,67.0,30.78,51.49,24.76,53.96,51.32,48.91\n"
    "44,0.238,0.219,0.063,0.291,0.089,0.002,0.0,0.045,0.0,0.001,0.05,0.0,0.001,0.001,0.0,0.0,0.0,33.28,37.37,66.62,28.07,29.51,80.25,67.0,30.8,46.99,23.25,57.0,50.76,50.74\n"
    "45,0.156,0.093,0.121,0.012,0.008,0.408,0.153,0.005,0.006,0.008,0.016,0.013,0.001,0.0,0.0,0.0,0.0,33.44,38.31,66.54,28.07,27.87,80.7,67.33,30.08,48.79,26.06,53.73,53.18,53.01\n"
    "46,0.214,0.111,0.041,0.121,0.025,0.124,0.052,0.012,0.0,0.092,0.062,0.129,0.006,0.012,0.0,0.0,0.0,33.08,38.3,65.52,27.6,29.47,79.72,68.33,30.24,48.05,25.55,51.19,52.45,50.89\n"
    "47,0.312,0.22,0.033,0.169,0.048,0.082,0.05,0.0,0.057,0.027,0.002,0.0,0.0,0.0,0.0,0.0,0.0,33.78,39.67,66.98,31.17,30.34,81.35,67.17,30.24,49.58,24.32,57.52,50.72,47.63\n"
    "48,0.428,0.081,0.114,0.109,0.116,0.001,0.029,0.031,0.021,0.038,0.031,0.001,0.0,0.0,0.0,0.0,0.0,33.17,41.07,67.21,29.73,32.71,81.77,67.67,30.67,49.49,24.68,56.91,52.24,53.84\n"
    "49,0.371,0.051,0.082,0.205,0.12,0.036,0.004,0.029,0.0,0.067,0.034,0.0,0.0,0.0,0.0,0.0,0.0,33.53,39.09,66.81,29.13,30.23,79.9,68.17,31.42,49.54,24.99,54.06,50.51,50.25\n"
    "50,0.122,0.343,0.091,0.144,0.084,0.009,0.004,0.006,0.019,0.0,0.174,0.001,0.003,0.001,0.0,0.0,0.0,33.74,35.65,64.58,27.57,26.19,80.83,61.83,29.35,47.71,24.58,56.48,50.26,54.37\n"
    "51,0.229,0.126,0.194,0.048,0.04,0.099,0.027,0.089,0.04,0.046,0.028,0.0,0.002,0.0,0.01,0.022,0.0,33.37,38.68,65.68,28.27,30.29,78.4,67.0,30.41,49.02,25.32,50.96,51.83,50.94\n"
    "52,0.101,0.37,0.011,0.14,0.022,0.058,0.015,0.026,0.216,0.006,0.0,0.033,0.0,0.002,0.0,0.0,0.0,33.41,36.07,63.99,29.1,30.84,80.03,66.0,31.08,47.64,24.91,56.62,51.33,52.38\n"
    "53,0.269,0.079,0.039,0.482,0.063,0.012,0.052,0.002,0.0,0.0,0.002,0.0,0.0,0.0,0.0,0.0,0.0,32.96,37.68,65.85,29.43,29.76,81.38,66.17,30.77,48.38,25.17,56.45,52.18,51.21\n"
    "54,0.213,0.186,0.294,0.023,0.119,0.001,0.088,0.024,0.002,0.023,0.005,0.023,0.0,0.0,0.0,0.0,0.0,33.88,38.53,65.76,28.73,29.03,80.92,63.17,29.73,49.36,26.22,53.86,51.89,55.34\n"
    "55,0.037,0.311,0.012,0.117,0.16,0.004,0.094,0.007,0.236,0.014,0.0,0.007,0.0,0.0,0.0,0.0,0.0,33.75,35.4,64.51,28.3,28.63,77.75,66.33,30.8,46.96,24.63,53.85,51.59,54.52\n"
    "56,0.363,0.104,0.25,0.028,0.058,0.06,0.007,0.086,0.0,0.044,0.0,0.0,0.0,0.0,0.0,0.0,0.0,33.79,40.5,66.89,29.87,30.74,82.07,64.0,31.42,51.22,24.91,53.26,50.5,50.5\n"
    "57,0.435,0.085,0.137,0.039,0.085,0.017,0.122,0.004,0.007,0.059,0.0,0.0,0.0,0.001,0.0,0.0,0.009,33.24,41.74,68.07,29.2,31.79,80.42,66.17,31.39,51.14,25.19,55.37,53.21,53.58\n"
    "58,0.339,0.05,0.176,0.088,0.007,0.05,0.077,0.004,0.0,0.122,0.001,0.006,0.012,0.0,0.069,0.0,0.0,33.3,39.63,67.31,29.5,31.11,79.83,69.0,29.82,49.24,25.93,54.46,51.46,52.31\n"
    "59,0.112,0.218,0.471,0.097,0.038,0.016,0.006,0.001,0.018,0.005,0.0,0.017,0.0,0.0,0.0,0.0,0.0,33.56,35.36,64.44,28.1,27.32,80.85,64.0,29.67,47.13,23.68,52.73,50.83,52.22\n"
    "60,0.268,0.17,0.081,0.041,0.153,0.077,0.016,0.0,0.001,0.017,0.033,0.095,0.0,0.0,0.048,0.0,0.0,33.54,38.83,66.38,27.97,30.17,79.6,64.83,30.08,47.88,25.17,53.17,52.16,53.03\n"
    "61,0.272,0.218,0.107,0.238,0.016,0.113,0.013,0.02,0.0,0.003,0.0,0.001,0.0,0.0,0.0,0.0,0.0,33.42,38.53,66.5,27.83,28.75,78.93,67.0,29.98,48.2,25.7,59.65,52.37,50.41\n"
    "62,0.128,0.257,0.278,0.041,0.141,0.027,0.02,0.0,0.0,0.099,0.009,0.0,0.0,0.0,0.0,0.0,0.0,33.84,36.46,64.74,27.37,26.22,80.05,64.0,29.46,47.09,25.52,58.15,51.41,52.17\n"
    "63,0.232,0.294,0.119,0.038,0.085,0.046,0.025,0.013,0.026,0.02,0.073,0.0,0.001,0.0,0.0,0.027,0.001,33.32,38.8,66.54,28.83,30.38,79.5,66.0,30.37,49.09,26.5,57.5,51.63,52.27\n"
    "64,0.188,0.075,0.131,0.369,0.006,0.06,0.009,0.016,0.002,0.0,0.093,0.001,0.003,0.017,0.0,0.03,0.0,33.55,36.43,64.87,27.87,26.25,78.65,66.83,29.19,46.9,26.65,55.31,51.85,51.5\n";

}  // namespace datamix::detail
