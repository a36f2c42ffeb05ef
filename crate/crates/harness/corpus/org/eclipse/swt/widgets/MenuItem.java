package org.eclipse.swt.widgets;

public class MenuItem {
    public Font getFont() {
        if (!parent.checkData(this, true)) disposed = true;
        if (disposed) error(SWT.ERROR_WIDGET_DISPOSED);
        return font != null ? font : defaults.font;
    }

    public Color getBackground() {
        if (!parent.checkData(this, true)) disposed = true;
        if (disposed) error(SWT.ERROR_WIDGET_DISPOSED);
        return background != null ? background : defaults.background;
    }

    public Color getForeground() {
        if (!parent.checkData(this, true)) disposed = true;
        if (disposed) error(SWT.ERROR_WIDGET_DISPOSED);
        return foreground != null ? foreground : defaults.foreground;
    }

    public Image getImage() {
        if (!parent.checkData(this, true)) disposed = true;
        if (disposed) error(SWT.ERROR_WIDGET_DISPOSED);
        return image != null ? image : defaults.image;
    }

    public String getText() {
        if (!parent.checkData(this, true)) disposed = true;
        if (disposed) error(SWT.ERROR_WIDGET_DISPOSED);
        return text != null ? text : defaults.text;
    }
}
