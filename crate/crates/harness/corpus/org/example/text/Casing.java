package org.example.text;

public class Casing {
    public static String upperAll(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int i = 0; i < s.length(); i++) {
            char ch = s.charAt(i);
            out.append(Character.toUpperCase(ch));
        }
        return out.substring(0);
    }

    public static String upperText(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int j = 0; j < s.length(); j++) {
            char ch = s.charAt(j);
            out.append(Character.toUpperCase(ch));
        }
        return out.substring(0);
    }

    public static String upperValue(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int k = 0; k < s.length(); k++) {
            char ch = s.charAt(k);
            out.append(Character.toUpperCase(ch));
        }
        return out.substring(0);
    }

    public static String upperName(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int n = 0; n < s.length(); n++) {
            char ch = s.charAt(n);
            out.append(Character.toUpperCase(ch));
        }
        return out.substring(0);
    }

    public static String upperLabel(String s) {
        if (s == null) return null;
        StringBuilder out = new StringBuilder(s.length());
        for (int p = 0; p < s.length(); p++) {
            char ch = s.charAt(p);
            out.append(Character.toUpperCase(ch));
        }
        return out.substring(0);
    }
}
