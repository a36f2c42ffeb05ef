package org.example.text;

public class Markers {
    public static String markQuotes(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char ch = s.charAt(i);
            out.append(ch);
        }
        if (s.charAt(0) == '"' || s.charAt(0) == '\\') {
            out.append('\\');
        }
        return out.substring(0);
    }

    public static String markText(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int j = 0; j < s.length(); j++) {
            char ch = s.charAt(j);
            out.append(ch);
        }
        if (s.charAt(0) == '"' || s.charAt(0) == '\\') {
            out.append('\\');
        }
        return out.substring(0);
    }

    public static String markValue(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int k = 0; k < s.length(); k++) {
            char ch = s.charAt(k);
            out.append(ch);
        }
        if (s.charAt(0) == '"' || s.charAt(0) == '\\') {
            out.append('\\');
        }
        return out.substring(0);
    }

    public static String markName(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int n = 0; n < s.length(); n++) {
            char ch = s.charAt(n);
            out.append(ch);
        }
        if (s.charAt(0) == '"' || s.charAt(0) == '\\') {
            out.append('\\');
        }
        return out.substring(0);
    }

    public static String markLabel(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int p = 0; p < s.length(); p++) {
            char ch = s.charAt(p);
            out.append(ch);
        }
        if (s.charAt(0) == '"' || s.charAt(0) == '\\') {
            out.append('\\');
        }
        return out.substring(0);
    }
}
